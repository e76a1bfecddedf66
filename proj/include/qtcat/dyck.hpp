#pragma once

#include <qtcat/partition.hpp>
#include <qtcat/rational.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qtcat {

// A Dyck path of length n encoded as g = (g_0,...,g_{n-1}) with g_0 = 0
// and 0 <= g_{i+1} <= g_i + 1; g_i counts the complete squares between
// the path's north step in row i+1 and the diagonal.
class DyckSequence {
public:
    explicit DyckSequence(std::vector<int> g) : g_(std::move(g)) {
        if (g_.empty()) throw std::invalid_argument("Dyck sequence must be non-empty");
        if (g_[0] != 0) throw std::invalid_argument("Dyck sequence must start at 0");
        for (std::size_t i = 0; i + 1 < g_.size(); ++i)
            if (g_[i + 1] < 0 || g_[i + 1] > g_[i] + 1)
                throw std::invalid_argument("Dyck sequence step out of range");
    }

    const std::vector<int>& values() const { return g_; }
    int n() const { return static_cast<int>(g_.size()); }

    long long area() const {
        return std::accumulate(g_.begin(), g_.end(), 0LL);
    }

    long long coarea() const {
        long long n_ll = n();
        return n_ll * (n_ll - 1) / 2 - area();
    }

    // b(g_0..g_{m-1}) = m-1-g_{m-1} + b(g_0..g_{m-2-g_{m-1}}), peeled
    // iteratively: each step both contributes the rebound distance and
    // becomes the next prefix length.
    long long bounce() const {
        long long b = 0;
        int len = n();
        while (len > 0) {
            int next = len - 1 - g_[len - 1];
            b += next;
            len = next;
        }
        return b;
    }

    // mu_i = n - i - g_{n-i} (1-based i, zero parts dropped); lambda = mu^t.
    // |lambda| = coarea.
    std::pair<Partition, Partition> to_partitions() const {
        std::vector<int> mu;
        for (int i = 1; i <= n() - 1; ++i) {
            int part = n() - i - g_[n() - i];
            if (part > 0) mu.push_back(part);
        }
        Partition mu_p(std::move(mu));
        return {mu_p, mu_p.conjugate()};
    }

    friend bool operator==(const DyckSequence&, const DyckSequence&) = default;

private:
    std::vector<int> g_;
};

// Range over all Dyck sequences of length n in lexicographic order.
class DyckRange {
public:
    explicit DyckRange(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("Dyck paths need length >= 1");
    }

    class iterator {
    public:
        iterator() = default;
        explicit iterator(int n) : g_(n, 0) {}

        const std::vector<int>& operator*() const { return g_; }

        iterator& operator++() {
            // lex successor: bump the last position that can grow, zero the tail
            for (int i = static_cast<int>(g_.size()) - 1; i >= 1; --i) {
                if (g_[i] <= g_[i - 1]) {
                    ++g_[i];
                    std::fill(g_.begin() + i + 1, g_.end(), 0);
                    return *this;
                }
            }
            g_.clear();  // past the staircase: end
            return *this;
        }

        bool operator==(const iterator& o) const { return g_ == o.g_; }

    private:
        std::vector<int> g_;  // empty = end
    };

    iterator begin() const { return iterator(n_); }
    iterator end() const { return iterator(); }

private:
    int n_;
};

// Polynomial in q and t with non-negative integer coefficients.
class BivariatePolynomial {
public:
    using Key = std::pair<int, int>;  // (q-exponent, t-exponent)

    void add(int q, int t, const Int& c) {
        if (q < 0 || t < 0) throw std::invalid_argument("negative exponent");
        if (c == 0) return;
        auto it = coef_.find({q, t});
        if (it == coef_.end()) {
            coef_.emplace(Key{q, t}, c);
        } else {
            it->second += c;
            if (it->second == 0) coef_.erase(it);
        }
    }

    Int coefficient(int q, int t) const {
        auto it = coef_.find({q, t});
        return it == coef_.end() ? Int(0) : it->second;
    }

    Int evaluate_at_one() const {
        Int s = 0;
        for (const auto& [key, c] : coef_) s += c;
        return s;
    }

    const std::map<Key, Int>& coefficients() const { return coef_; }

    int max_q() const {
        int m = 0;
        for (const auto& [key, c] : coef_) m = std::max(m, key.first);
        return m;
    }
    int max_t() const {
        int m = 0;
        for (const auto& [key, c] : coef_) m = std::max(m, key.second);
        return m;
    }

    friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

private:
    std::map<Key, Int> coef_;
};

// Sum of q^coarea t^bounce over all Dyck paths of length n.
inline BivariatePolynomial qt_catalan_tilde(int n) {
    BivariatePolynomial p;
    for (const auto& g : DyckRange(n)) {
        DyckSequence d(g);
        p.add(static_cast<int>(d.coarea()), static_cast<int>(d.bounce()), 1);
    }
    return p;
}

inline Int catalan_number(int n) {
    // C_n = binomial(2n, n)/(n+1)
    Int num = 1;
    for (int i = 1; i <= n; ++i) num = num * (n + i) / i;
    return num / (n + 1);
}

}  // namespace qtcat
