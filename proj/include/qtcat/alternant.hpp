#pragma once

#include <qtcat/diagram.hpp>
#include <qtcat/rational.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace qtcat {

// A finite linear combination of sorted, non-degenerate lattice
// diagrams over the rationals. All keys share the same cell count and
// bidegree; homogeneity is enforced whenever a term is merged in, which
// catches operator bugs at the point they happen. The empty combination
// is the zero element and carries no cell count or bidegree.
class Alternant {
public:
    using TermMap = std::map<LatticeDiagram, Rat, DiagramPrec>;

    Alternant() = default;

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    int term_count() const { return static_cast<int>(terms_.size()); }

    // cell count of every key; meaningless for the zero alternant
    int n() const {
        if (is_zero()) throw std::logic_error("zero alternant has no cell count");
        return terms_.begin()->first.size();
    }

    std::optional<std::pair<long long, long long>> bidegree() const {
        if (is_zero()) return std::nullopt;
        return terms_.begin()->first.bidegree();
    }

    // Merge c * Delta_L in, normalizing L by sorting. Degenerate
    // diagrams vanish silently.
    void add_term(const LatticeDiagram& L, const Rat& c) {
        if (c == 0) return;
        auto [sorted, sign] = sort_diagram(L);
        if (sign == 0) return;
        check_compatible(sorted);
        Rat v = sign > 0 ? c : -c;
        auto it = terms_.find(sorted);
        if (it == terms_.end()) {
            terms_.emplace(std::move(sorted), std::move(v));
        } else {
            it->second += v;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Alternant& operator+=(const Alternant& other) {
        for (const auto& [L, c] : other.terms_) {
            check_compatible(L);
            auto it = terms_.find(L);
            if (it == terms_.end()) {
                terms_.emplace(L, c);
            } else {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }

    Alternant& operator*=(const Rat& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [L, v] : terms_) v *= c;
        return *this;
    }

    friend bool operator==(const Alternant&, const Alternant&) = default;

private:
    void check_compatible(const LatticeDiagram& L) const {
        if (is_zero()) return;
        const LatticeDiagram& ref = terms_.begin()->first;
        if (L.size() != ref.size())
            throw std::invalid_argument("alternant: mixed cell counts");
        if (L.bidegree() != ref.bidegree())
            throw std::invalid_argument("alternant: mixed bidegrees (homogeneity violation)");
    }

    TermMap terms_;
};

// c * Delta_L as an alternant (zero when L is degenerate).
inline Alternant term(const LatticeDiagram& L, const Rat& c) {
    Alternant f;
    f.add_term(L, c);
    return f;
}

inline Alternant add(const Alternant& f, const Alternant& g) {
    Alternant r = f;
    r += g;
    return r;
}

inline Alternant scale(const Alternant& f, const Rat& c) {
    Alternant r = f;
    r *= c;
    return r;
}

// Maximal term in the end-anchored lexicographic order, or nothing for zero.
inline std::optional<std::pair<LatticeDiagram, Rat>> leading_diagram(const Alternant& f) {
    if (f.is_zero()) return std::nullopt;
    auto it = std::prev(f.terms().end());
    return std::make_pair(it->first, it->second);
}

// Delta_n lives on the bottom-row staircase [(0,0),(1,0),...,(n-1,0)].
inline LatticeDiagram staircase_diagram(int n) {
    if (n < 1) throw std::invalid_argument("staircase diagram needs n >= 1");
    LatticeDiagram L;
    L.cells.reserve(n);
    for (int i = 0; i < n; ++i) L.cells.push_back({i, 0});
    return L;
}

inline Alternant delta_n(int n) { return term(staircase_diagram(n), 1); }

inline std::string to_string(const Alternant& f) {
    if (f.is_zero()) return "0";
    std::string s;
    // leading term first
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const Rat& c = it->second;
        if (!s.empty()) s += c >= 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        Rat a = c >= 0 ? c : Rat(-c);
        if (a != 1) s += pretty_fraction(a) + "*";
        s += to_string(it->first);
    }
    return s;
}

}  // namespace qtcat
