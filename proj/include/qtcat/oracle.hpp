#pragma once

#include <qtcat/alternant.hpp>
#include <qtcat/diagram.hpp>
#include <qtcat/rational.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qtcat {

// Ground-truth engine. Everything here works on honest polynomials in
// x_1..x_n, y_1..y_n with exact rational coefficients, so that the
// operator algebra on diagrams can be falsified against real
// differentiation. Nothing outside this header depends on it.
class MultivariatePolynomial {
public:
    // exponent vector: (a_1..a_n, b_1..b_n)
    using Exponents = std::vector<int>;

    MultivariatePolynomial() = default;
    explicit MultivariatePolynomial(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("polynomial needs n >= 1");
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    void add_term(const Exponents& e, const Rat& c) {
        if (static_cast<int>(e.size()) != 2 * n_)
            throw std::invalid_argument("exponent vector of wrong arity");
        for (int v : e)
            if (v < 0) throw std::invalid_argument("negative exponent");
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultivariatePolynomial& operator+=(const MultivariatePolynomial& o) {
        if (o.is_zero()) return *this;
        if (is_zero() && n_ == 0) n_ = o.n_;
        if (n_ != o.n_) throw std::invalid_argument("mixed variable counts");
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    MultivariatePolynomial& operator*=(const Rat& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }

    long long total_degree() const {
        long long d = 0;
        for (const auto& [e, c] : terms_)
            d = std::max(d, std::accumulate(e.begin(), e.end(), 0LL));
        return d;
    }

    // zero compares equal to zero regardless of how it was built
    friend bool operator==(const MultivariatePolynomial& a,
                           const MultivariatePolynomial& b) {
        if (a.terms_.empty() && b.terms_.empty()) return true;
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    int n_ = 0;
    std::map<Exponents, Rat> terms_;
};

inline MultivariatePolynomial operator+(MultivariatePolynomial a,
                                        const MultivariatePolynomial& b) {
    a += b;
    return a;
}

inline MultivariatePolynomial operator*(MultivariatePolynomial a, const Rat& c) {
    a *= c;
    return a;
}

// The normalized determinant of a diagram, expanded as a plain
// permutation sum: sum over sigma of sgn(sigma) prod_j
// x_{sigma(j)}^{p_j} y_{sigma(j)}^{q_j} / (p_j! q_j!). Degenerate
// diagrams give the zero polynomial. Intended for n <= 6.
inline MultivariatePolynomial expand_delta(const LatticeDiagram& L) {
    const int n = L.size();
    MultivariatePolynomial P(n);
    auto [sorted, sig] = sort_diagram(L);
    if (sig == 0) return P;

    Rat norm = 1;
    for (const Cell& c : L.cells)
        norm /= Rat(factorial(c.x) * factorial(c.y));

    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (sigma[i] > sigma[j]) ++inv;
        MultivariatePolynomial::Exponents e(2 * n, 0);
        for (int j = 0; j < n; ++j) {
            e[sigma[j]] += L.cells[j].x;
            e[n + sigma[j]] += L.cells[j].y;
        }
        P.add_term(e, inv % 2 == 0 ? norm : -norm);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return P;
}

// sum_L coeff(L) * Delta_L: the polynomial an alternant stands for.
inline MultivariatePolynomial expand_alternant(const Alternant& f, int n_hint = 0) {
    if (f.is_zero()) {
        return n_hint > 0 ? MultivariatePolynomial(n_hint) : MultivariatePolynomial(1);
    }
    MultivariatePolynomial P(f.n());
    for (const auto& [L, c] : f.terms()) P += expand_delta(L) * c;
    return P;
}

// The genuine operator sum_i y_i d^a/dx_i^a applied term by term.
inline MultivariatePolynomial diff_E(int a, const MultivariatePolynomial& P) {
    if (a < 1) throw std::invalid_argument("E operator needs a >= 1");
    if (P.is_zero()) return P;
    const int n = P.n();
    MultivariatePolynomial out(n);
    for (const auto& [e, c] : P.terms()) {
        for (int i = 0; i < n; ++i) {
            if (e[i] < a) continue;
            MultivariatePolynomial::Exponents d = e;
            d[i] -= a;
            d[n + i] += 1;
            out.add_term(d, c * Rat(falling(e[i], a)));
        }
    }
    return out;
}

// sum_i d^k/dx_i^k d^h/dy_i^h P
inline MultivariatePolynomial polarized_power_sum(int k, int h,
                                                  const MultivariatePolynomial& P) {
    if (P.is_zero()) return P;
    const int n = P.n();
    MultivariatePolynomial out(n);
    for (const auto& [e, c] : P.terms()) {
        for (int i = 0; i < n; ++i) {
            if (e[i] < k || e[n + i] < h) continue;
            MultivariatePolynomial::Exponents d = e;
            d[i] -= k;
            d[n + i] -= h;
            out.add_term(d, c * Rat(falling(e[i], k) * falling(e[n + i], h)));
        }
    }
    return out;
}

// True when every adjacent diagonal transposition negates P; the
// generators suffice for the full symmetric group.
inline bool is_alternating(const MultivariatePolynomial& P) {
    const int n = P.n();
    for (int i = 0; i + 1 < n; ++i) {
        MultivariatePolynomial swapped(n);
        for (const auto& [e, c] : P.terms()) {
            MultivariatePolynomial::Exponents d = e;
            std::swap(d[i], d[i + 1]);
            std::swap(d[n + i], d[n + i + 1]);
            swapped.add_term(d, c);
        }
        if (!(swapped + P).is_zero()) return false;
    }
    return true;
}

// True when every polarized power sum up to the total degree kills P;
// higher orders annihilate any polynomial of that degree.
inline bool is_harmonic(const MultivariatePolynomial& P) {
    const long long deg = P.total_degree();
    for (int k = 0; k <= deg; ++k)
        for (int h = 0; k + h <= deg; ++h) {
            if (k + h == 0) continue;
            if (!polarized_power_sum(k, h, P).is_zero()) return false;
        }
    return true;
}

// Re-expands an alternating polynomial in the diagram basis: peel the
// largest monomial cell pattern, read its coefficient against the
// normalization, subtract that multiple of the expanded determinant,
// repeat. Each peel strictly lowers the leading diagram, so this
// terminates; inputs that are not alternating fail loudly.
inline Alternant to_delta_basis(const MultivariatePolynomial& P) {
    const int n = P.n();
    MultivariatePolynomial rest = P;
    Alternant out;
    bool have_prev = false;
    LatticeDiagram prev;

    while (!rest.is_zero()) {
        // the largest diagram among the monomial cell patterns
        bool have_best = false;
        LatticeDiagram best;
        for (const auto& [e, c] : rest.terms()) {
            LatticeDiagram D;
            for (int i = 0; i < n; ++i) D.cells.push_back({e[i], e[n + i]});
            auto [sorted, sig] = sort_diagram(D);
            if (sig == 0)
                throw std::invalid_argument(
                    "to_delta_basis: repeated cell pattern, polynomial is not alternating");
            if (!have_best || compare_diagrams(sorted, best) > 0) {
                best = sorted;
                have_best = true;
            }
        }
        if (have_prev && compare_diagrams(best, prev) >= 0)
            throw std::invalid_argument(
                "to_delta_basis: leading diagram failed to decrease");
        prev = best;
        have_prev = true;

        // coefficient of the identity-aligned monomial of the leading diagram
        MultivariatePolynomial::Exponents aligned(2 * n, 0);
        Rat norm = 1;
        for (int i = 0; i < n; ++i) {
            aligned[i] = best.cells[i].x;
            aligned[n + i] = best.cells[i].y;
            norm *= Rat(factorial(best.cells[i].x) * factorial(best.cells[i].y));
        }
        auto it = rest.terms().find(aligned);
        if (it == rest.terms().end())
            throw std::invalid_argument(
                "to_delta_basis: aligned monomial missing, polynomial is not alternating");
        Rat coeff = it->second * norm;

        out += term(best, coeff);
        rest += expand_delta(best) * (-coeff);
    }
    return out;
}

// Rank over the rationals of the coefficient matrix of the given
// alternants (diagrams as columns). Rows are cleared of denominators,
// then eliminated fraction-free in the Bareiss fashion with exact
// divisions.
inline int exact_rank(const std::vector<Alternant>& rows) {
    std::map<LatticeDiagram, int, DiagramPrec> column_of;
    for (const Alternant& f : rows)
        for (const auto& [L, c] : f.terms())
            column_of.emplace(L, 0);
    int cols = 0;
    for (auto& [L, idx] : column_of) idx = cols++;

    const int m = static_cast<int>(rows.size());
    std::vector<std::vector<Int>> M(m, std::vector<Int>(cols, 0));
    for (int r = 0; r < m; ++r) {
        Int lcm = 1;
        for (const auto& [L, c] : rows[r].terms())
            lcm = boost::multiprecision::lcm(lcm, denominator(c));
        for (const auto& [L, c] : rows[r].terms())
            M[r][column_of[L]] = numerator(c) * (lcm / denominator(c));
    }

    int rank = 0;
    Int prev = 1;
    for (int c = 0; c < cols && rank < m; ++c) {
        int pivot = -1;
        for (int r = rank; r < m; ++r)
            if (M[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(M[rank], M[pivot]);
        for (int r = rank + 1; r < m; ++r) {
            for (int cc = c + 1; cc < cols; ++cc)
                M[r][cc] = (M[r][cc] * M[rank][c] - M[r][c] * M[rank][cc]) / prev;
            M[r][c] = 0;
        }
        prev = M[rank][c];
        ++rank;
    }
    return rank;
}

}  // namespace qtcat
