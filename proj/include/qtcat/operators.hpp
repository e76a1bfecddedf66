#pragma once

#include <qtcat/alternant.hpp>
#include <qtcat/partition.hpp>
#include <qtcat/tableau.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qtcat {

// A single E-application moves one cell left by a and up by 1. Two
// coefficient conventions are exposed:
//   formal   - weight 1 per move,
//   analytic - weight (q+1) per move, q the cell's y-exponent before the
//              move; this is the weight a genuine y d/dx^a application
//              produces on the normalized determinants.
// Every identity below holds under either convention; the polynomial
// oracle certifies the analytic one.
enum class EConvention { formal, analytic };

inline Alternant apply_E(int a, const Alternant& f, EConvention conv) {
    if (a < 1) throw std::invalid_argument("E operator needs a >= 1");
    Alternant out;
    for (const auto& [L, c] : f.terms()) {
        for (int i = 0; i < L.size(); ++i) {
            LatticeDiagram moved = L;
            const Cell& src = L.cells[i];
            moved.cells[i] = {src.x - a, src.y + 1};
            Rat w = conv == EConvention::analytic ? Rat(src.y + 1) : Rat(1);
            out.add_term(moved, c * w);
        }
    }
    return out;
}

// E_{a_1} E_{a_2} ... E_{a_k}: the rightmost factor acts first. The
// factors commute, so the order is irrelevant to the value.
inline Alternant apply_E_composition(const Composition& a, const Alternant& f,
                                     EConvention conv) {
    Alternant cur = f;
    for (auto it = a.parts().rbegin(); it != a.parts().rend(); ++it)
        cur = apply_E(*it, cur, conv);
    return cur;
}

// A strictly decreasing column (t_k,...,t_1); stored internally in
// increasing order t_1 < ... < t_k. Admissible columns have gaps of at
// least 2; a column with a gap of exactly 1 annihilates everything.
class ColumnSpec {
public:
    static ColumnSpec from_decreasing(std::vector<int> t) {
        std::reverse(t.begin(), t.end());
        return ColumnSpec(std::move(t));
    }

    static ColumnSpec from_increasing(std::vector<int> t) {
        return ColumnSpec(std::move(t));
    }

    const std::vector<int>& increasing() const { return asc_; }

    std::vector<int> decreasing() const {
        std::vector<int> d(asc_.rbegin(), asc_.rend());
        return d;
    }

    int height() const { return static_cast<int>(asc_.size()); }

    int weight() const {
        return std::accumulate(asc_.begin(), asc_.end(), 0);
    }

    bool admissible() const {
        for (std::size_t i = 1; i < asc_.size(); ++i)
            if (asc_[i] < asc_[i - 1] + 2) return false;
        return true;
    }

private:
    explicit ColumnSpec(std::vector<int> asc) : asc_(std::move(asc)) {
        if (asc_.empty())
            throw std::invalid_argument("column must be non-empty");
        if (asc_.front() < 1)
            throw std::invalid_argument("column entries must be positive");
        for (std::size_t i = 1; i < asc_.size(); ++i)
            if (asc_[i] <= asc_[i - 1])
                throw std::invalid_argument("column entries must be strictly decreasing");
    }

    std::vector<int> asc_;
};

enum class FStrategy { determinant, injective };

namespace detail {

// All permutations of {1..k} with their inversion-count sign.
inline std::vector<std::pair<std::vector<int>, int>> signed_permutations(int k) {
    std::vector<int> w(k);
    for (int i = 0; i < k; ++i) w[i] = i + 1;
    std::vector<std::pair<std::vector<int>, int>> out;
    do {
        int inv = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (w[i] > w[j]) ++inv;
        out.emplace_back(w, inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// Move amounts for one permutation: slot i (1-based, t_i the i-th
// smallest entry) moves its cell by t_i + (k-i+1) - w(k-i+1).
inline std::vector<int> slot_moves(const ColumnSpec& t, const std::vector<int>& w) {
    const int k = t.height();
    std::vector<int> m(k);
    for (int i = 1; i <= k; ++i)
        m[i - 1] = t.increasing()[i - 1] + (k - i + 1) - w[k - i];
    return m;
}

inline void for_each_injective(int k, int n,
                               std::vector<int>& pick, std::vector<bool>& used,
                               const auto& fn) {
    if (static_cast<int>(pick.size()) == k) {
        fn(pick);
        return;
    }
    for (int p = 0; p < n; ++p) {
        if (used[p]) continue;
        used[p] = true;
        pick.push_back(p);
        for_each_injective(k, n, pick, used, fn);
        pick.pop_back();
        used[p] = false;
    }
}

}  // namespace detail

// The column operator attached to t, evaluated either as the alternating
// sum of E-compositions over S_k (determinant) or as the reduced sum over
// injective cell assignments with the explicit per-cell update (injective).
// The two agree exactly; the determinant form serves as the oracle for
// the injective one.
inline Alternant apply_F_column(const ColumnSpec& t, const Alternant& f,
                                EConvention conv,
                                FStrategy strategy = FStrategy::injective) {
    const int k = t.height();
    const auto perms = detail::signed_permutations(k);

    if (strategy == FStrategy::determinant) {
        Alternant out;
        for (const auto& [w, sign] : perms) {
            auto moves = detail::slot_moves(t, w);
            // the slot moves form a composition (all parts positive)
            std::vector<int> comp(moves.rbegin(), moves.rend());
            Alternant piece = apply_E_composition(Composition(std::move(comp)), f, conv);
            out += scale(piece, sign);
        }
        return out;
    }

    Alternant out;
    for (const auto& [L, c] : f.terms()) {
        const int n = L.size();
        if (k > n) continue;  // no injective assignment exists
        for (const auto& [w, sign] : perms) {
            auto moves = detail::slot_moves(t, w);
            std::vector<int> pick;
            std::vector<bool> used(n, false);
            detail::for_each_injective(k, n, pick, used, [&](const std::vector<int>& f_map) {
                LatticeDiagram moved = L;
                Rat weight = c * sign;
                for (int slot = 0; slot < k; ++slot) {
                    const Cell& src = L.cells[f_map[slot]];
                    moved.cells[f_map[slot]] = {src.x - moves[slot], src.y + 1};
                    if (conv == EConvention::analytic) weight *= (src.y + 1);
                }
                out.add_term(moved, weight);
            });
        }
    }
    return out;
}

// F_T = F_{T_{mu_1}} ... F_{T_2} F_{T_1}: column 1 acts first.
inline Alternant apply_F_tableau(const Tableau& T, const Alternant& f,
                                 EConvention conv,
                                 FStrategy strategy = FStrategy::injective) {
    Alternant cur = f;
    const int width = T.shape().part(1);
    for (int j = 1; j <= width; ++j) {
        cur = apply_F_column(ColumnSpec::from_increasing(T.column(j)), cur, conv, strategy);
        if (cur.is_zero()) break;
    }
    return cur;
}

// The diagram the top-indexed identity assignment produces when every
// column of T acts on the staircase: the n - r lowest staircase cells
// stay put and the cell for row i lands on (n - i - s_i, mu_i). When
// |s(T)| < n this is the leading diagram of F_T Delta_n with
// coefficient +1. Returns nothing when a cell leaves the grid or two
// cells collide, which can happen once |s(T)| >= n.
inline std::optional<LatticeDiagram> predicted_leading(const Tableau& T, int n) {
    const Partition mu = T.shape();
    const std::vector<int> s = T.row_sums();
    const int r = mu.length();
    if (r > n) return std::nullopt;

    LatticeDiagram L;
    for (int i = 0; i < n - r; ++i) L.cells.push_back({i, 0});
    for (int i = 1; i <= r; ++i) {
        int x = n - i - s[i - 1];
        if (x < 0) return std::nullopt;
        L.cells.push_back({x, mu.part(i)});
    }
    auto [sorted, sign] = sort_diagram(L);
    if (sign == 0) return std::nullopt;
    return sorted;
}

}  // namespace qtcat
