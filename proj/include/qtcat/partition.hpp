#pragma once

#include <qtcat/rational.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qtcat {

// A partition: positive parts in non-increasing order. The empty
// partition is allowed and compares equal to any other empty one.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i - 1] < parts_[i])
                throw std::invalid_argument("partition parts must be non-increasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    long long weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0LL);
    }

    int part(int i) const {  // 1-based, 0 beyond the end
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    // Conjugate partition: lambda^t_j = #{i : lambda_i >= j}.
    Partition conjugate() const {
        std::vector<int> t;
        for (int j = 1; j <= part(1); ++j) {
            int count = 0;
            for (int p : parts_)
                if (p >= j) ++count;
            t.push_back(count);
        }
        return Partition(std::move(t));
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

// An ordered sequence of positive parts.
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("composition parts must be positive");
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }

    long long weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0LL);
    }

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

// The unique non-decreasing decomposition of c into m positive parts
// differing by at most one: m - (c mod m) floors then (c mod m) ceils.
inline Composition balance_composition(int c, int m) {
    if (m < 1) throw std::invalid_argument("balance_composition: part count must be positive");
    if (c < m) throw std::invalid_argument("balance_composition: unbalanceable into positive parts");
    int lo = c / m, rem = c % m;
    std::vector<int> parts(m - rem, lo);
    parts.insert(parts.end(), rem, lo + 1);
    return Composition(std::move(parts));
}

// Number of partitions of k into exactly l parts.
inline Int count_partitions(int k, int l) {
    if (k < 0 || l < 0) return 0;
    if (l > k) return 0;
    // p(k, l) = p(k-1, l-1) + p(k-l, l)
    std::vector<std::vector<Int>> p(k + 1, std::vector<Int>(l + 1, 0));
    p[0][0] = 1;
    for (int kk = 1; kk <= k; ++kk)
        for (int ll = 1; ll <= std::min(kk, l); ++ll)
            p[kk][ll] = p[kk - 1][ll - 1] + (kk - ll >= 0 ? p[kk - ll][ll] : Int(0));
    return p[k][l];
}

namespace detail {
inline void emit_partitions(int remaining, int max_part, int parts_left,
                            std::vector<int>& acc, std::vector<Partition>& out) {
    if (parts_left == 0) {
        if (remaining == 0) out.push_back(Partition(acc));
        return;
    }
    // each remaining part is at least 1 and at most max_part
    int hi = std::min(max_part, remaining - (parts_left - 1));
    for (int p = hi; p >= 1; --p) {
        acc.push_back(p);
        emit_partitions(remaining - p, p, parts_left - 1, acc, out);
        acc.pop_back();
    }
}

inline void emit_all_partitions(int remaining, int max_part,
                                std::vector<int>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        acc.push_back(p);
        emit_all_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}
}  // namespace detail

// All partitions of k into exactly l parts, in decreasing lexicographic order.
inline std::vector<Partition> partitions_with_parts(int k, int l) {
    std::vector<Partition> out;
    if (k < 0 || l < 0) return out;
    if (l == 0) {
        if (k == 0) out.push_back(Partition());
        return out;
    }
    std::vector<int> acc;
    detail::emit_partitions(k, k, l, acc, out);
    return out;
}

// All partitions of k (any number of parts), decreasing lexicographic.
inline std::vector<Partition> partitions_of(int k) {
    std::vector<Partition> out;
    if (k < 0) return out;
    std::vector<int> acc;
    detail::emit_all_partitions(k, k, acc, out);
    return out;
}

}  // namespace qtcat
