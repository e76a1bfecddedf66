#pragma once

#include <qtcat/dyck.hpp>
#include <qtcat/framed.hpp>
#include <qtcat/operators.hpp>

#include <stdexcept>
#include <vector>

namespace qtcat {

// One constructed basis vector of a bihomogeneous alternating component:
// the partition indexing it, the framed tableau the partition maps to,
// the alternant obtained by driving the tableau's column operators into
// the staircase, and the alternant's leading diagram.
struct BasisElement {
    Partition lambda;
    Tableau tableau;
    Alternant alternant;
    LatticeDiagram leading;
};

// Coefficient of q^k t^l in the enumerated (q,t)-Catalan polynomial:
// the dimension of the component with shifted x-degree k and y-degree l.
inline Int dim_A(int n, int k, int l) {
    if (k < 0 || l < 0) return 0;
    return qt_catalan_tilde(n).coefficient(k, l);
}

// The basis of the (k, l) component for k < n: one element per
// partition of k into l parts. Leading diagrams are pairwise distinct
// (they realize distinct shape/row-sum pairs), which is the
// triangularity that proves independence.
inline std::vector<BasisElement> basis_for(int n, int k, int l,
                                           EConvention conv = EConvention::formal) {
    if (k < 1 || k >= n)
        throw std::invalid_argument("basis_for: requires 1 <= k < n");
    if (l < 1) throw std::invalid_argument("basis_for: requires l >= 1");
    std::vector<BasisElement> out;
    for (const Partition& lambda : partitions_with_parts(k, l)) {
        Tableau t = partition_to_tableau(lambda);
        Alternant f = apply_F_tableau(t, delta_n(n), conv);
        auto lead = leading_diagram(f);
        if (!lead.has_value())
            throw std::logic_error("basis_for: operator annihilated a basis candidate");
        out.push_back({lambda, std::move(t), std::move(f), lead->first});
    }
    return out;
}

// The explicit y-degree-2 family, valid for every 2 <= k <= 2n-2 (also
// beyond the k < n window): two-entry rows (i,i) with i <= n-2 and
// (i,i+1) with i <= n-3, and two-entry columns i under j with
// i+2 <= j <= n-2, 1 <= i <= n-4, filtered to total entry sum k.
inline std::vector<BasisElement> l2_basis(int n, int k,
                                          EConvention conv = EConvention::formal) {
    std::vector<BasisElement> out;
    if (k < 2 || k > 2 * n - 2) return out;

    std::vector<Tableau> family;
    for (int i = 1; i <= n - 2; ++i)
        if (2 * i == k) family.push_back(Tableau({{i, i}}));
    for (int i = 1; i <= n - 3; ++i)
        if (2 * i + 1 == k) family.push_back(Tableau({{i, i + 1}}));
    for (int i = 1; i <= n - 4; ++i)
        for (int j = i + 2; j <= n - 2; ++j)
            if (i + j == k) family.push_back(Tableau({{i}, {j}}));

    for (Tableau& t : family) {
        Alternant f = apply_F_tableau(t, delta_n(n), conv);
        auto lead = leading_diagram(f);
        if (!lead.has_value())
            throw std::logic_error("l2_basis: operator annihilated a family member");
        Partition lambda = tableau_to_partition(t);
        out.push_back({std::move(lambda), std::move(t), std::move(f), lead->first});
    }
    return out;
}

}  // namespace qtcat
