#pragma once

#include <qtcat/partition.hpp>
#include <qtcat/tableau.hpp>

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qtcat {

// Framed tableaux: the image of the framing procedure below. Their
// characterization: column entries jump by at least 2, and a row may
// spread by more than 1 only to the right of an entry whose upper
// neighbor exceeds it by exactly 2.

// The two framing inequalities on a shape/row-sum pair.
inline bool framing_condition(const Partition& mu, const std::vector<int>& s) {
    const int l = mu.length();
    if (static_cast<int>(s.size()) != l)
        throw std::invalid_argument("framing_condition: shape/row-sum length mismatch");
    for (int i = 1; i <= l; ++i)
        if (s[i - 1] < (2 * i - 1) * mu.part(i)) return false;
    for (int i = 1; i < l; ++i)
        if (mu.part(i + 1) == mu.part(i) && s[i] < s[i - 1] + 2 * mu.part(i))
            return false;
    return true;
}

// A shape/row-sum pair that satisfies the framing condition.
struct FramingPair {
    Partition mu;
    std::vector<int> s;

    FramingPair(Partition shape, std::vector<int> row_sums)
        : mu(std::move(shape)), s(std::move(row_sums)) {
        if (!framing_condition(mu, s))
            throw std::invalid_argument("framing pair violates the framing condition");
    }
};

// Builds the unique framed tableau of shape mu and row sums s. Rows are
// filled top-down; within a row the segments under taller columns come
// first, each taking the head of the balance composition of whatever sum
// remains, capped at two below the entries above when the balance parts
// would crowd them.
inline Tableau fram(const Partition& mu, const std::vector<int>& s) {
    const int l = mu.length();
    if (static_cast<int>(s.size()) != l)
        throw std::invalid_argument("fram: shape/row-sum length mismatch");
    if (!framing_condition(mu, s))
        throw std::invalid_argument("fram: framing condition fails");
    if (l == 0) return Tableau();

    // t[i][j] 1-based, bottom-up
    std::vector<std::vector<int>> t(l + 1);
    for (int i = 1; i <= l; ++i) t[i].assign(mu.part(i) + 1, 0);

    {
        auto top = balance_composition(s[l - 1], mu.part(l)).parts();
        for (int j = 1; j <= mu.part(l); ++j) t[l][j] = top[j - 1];
    }

    for (int i = l - 1; i >= 1; --i) {
        int a = s[i - 1];
        int b = mu.part(i);
        for (int k = l; k >= i; --k) {
            const int seg_lo = mu.part(k + 1) + 1;  // mu_{l+1} = 0
            const int seg_hi = mu.part(k);
            if (seg_hi < seg_lo) continue;
            auto r = balance_composition(a, b).parts();  // r[0] sits in column seg_lo
            bool fits = true;
            if (k > i) {  // these columns have entries directly above
                for (int j = seg_lo; j <= seg_hi && fits; ++j)
                    fits = r[j - seg_lo] <= t[i + 1][j] - 2;
            }
            for (int j = seg_lo; j <= seg_hi; ++j) {
                t[i][j] = fits ? r[j - seg_lo] : t[i + 1][j] - 2;
                a -= t[i][j];
            }
            b -= seg_hi - seg_lo + 1;
        }
    }

    std::vector<std::vector<int>> rows(l);
    for (int i = 1; i <= l; ++i)
        rows[i - 1].assign(t[i].begin() + 1, t[i].end());
    return Tableau(std::move(rows));
}

inline Tableau fram(const FramingPair& pair) { return fram(pair.mu, pair.s); }

// The two characterizing properties of framed tableaux; used as a
// consistency check next to the defining is_framed test.
inline bool framed_characterization(const Tableau& T) {
    const auto& rows = T.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            // column jump >= 2
            if (i + 1 < rows.size() && j < rows[i + 1].size() &&
                rows[i + 1][j] - rows[i][j] < 2)
                return false;
            // row spread <= 1 unless an entry two above opens it up
            for (std::size_t j2 = j + 1; j2 < rows[i].size(); ++j2) {
                if (rows[i][j2] - rows[i][j] <= 1) continue;
                bool escape = i + 1 < rows.size() && j < rows[i + 1].size() &&
                              rows[i + 1][j] == rows[i][j] + 2;
                if (!escape) return false;
            }
        }
    }
    return true;
}

// A tableau is framed iff its shape/row-sum pair satisfies the framing
// condition and the framing procedure reproduces it entry for entry.
inline bool is_framed(const Tableau& T) {
    if (T.empty()) return true;
    const Partition mu = T.shape();
    const std::vector<int> s = T.row_sums();
    if (!framing_condition(mu, s)) return false;
    bool framed = fram(mu, s) == T;
    assert(!framed || framed_characterization(T));
    return framed;
}

// Entry-wise translation; framed tableaux stay framed as long as
// entries stay positive.
inline Tableau shift(const Tableau& T, int delta) {
    if (T.empty()) return T;
    auto rows = T.rows();
    for (auto& row : rows)
        for (int& v : row) {
            if (v + delta < 1)
                throw std::invalid_argument("shift: entries must stay positive");
            v += delta;
        }
    return Tableau(std::move(rows));
}

inline Tableau drop_bottom_row(const Tableau& T) {
    if (T.empty()) throw std::invalid_argument("drop_bottom_row: empty tableau");
    auto rows = T.rows();
    rows.erase(rows.begin());
    return Tableau(std::move(rows));
}

namespace detail {

inline int row_sum(const std::vector<int>& row) {
    return std::accumulate(row.begin(), row.end(), 0);
}

inline Partition grid_shape(const std::vector<std::vector<int>>& rows) {
    std::vector<int> mu;
    mu.reserve(rows.size());
    for (const auto& row : rows) mu.push_back(static_cast<int>(row.size()));
    return Partition(std::move(mu));  // throws if the shape degenerated
}

// Shared second step of insertion and removal: walk up from the bottom
// row while it still holds entries two below its own tail, rewriting the
// copies of x (and of x+1 when the tail strictly exceeds x+2) one row up,
// and book the per-row sum transfers d. Removal additionally requires the
// row to still start at x or x+1. Mutations are sequential: rows rewritten
// for one k are read back when k advances.
inline std::vector<int> transfer_row_sums(std::vector<std::vector<int>>& y, int x,
                                          bool removal) {
    const int lp = static_cast<int>(y.size());
    std::vector<int> s(lp);
    for (int k = 0; k < lp; ++k) s[k] = row_sum(y[k]);

    std::vector<int> d(lp + 2, 0);  // 1-based, d[1] = d[lp+1] = 0
    for (int k = 1; k <= lp - 1; ++k) {
        const std::vector<int>& below = y[k - 1];
        if (!(below.back() >= x + 2)) break;
        if (removal && !(below.front() <= x + 1)) break;
        std::vector<int>& above = y[k];
        const bool wide_tail = below.back() > x + 2;
        for (std::size_t j = 0; j < above.size(); ++j) {
            if (below[j] == x) above[j] = x + 2;
            if (wide_tail && below[j] == x + 1) above[j] = x + 3;
        }
        d[k + 1] = s[k] - row_sum(above);
        x += 2;
    }

    std::vector<int> sp(lp);
    for (int k = 1; k <= lp; ++k) sp[k - 1] = s[k - 1] + d[k + 1] - d[k];
    return sp;
}

}  // namespace detail

// Insert x into a framed tableau (x at most the smallest entry): bump a
// cell per row upward while rows end at x+2 or more, transfer row sums,
// then reframe.
inline Tableau insert(const Tableau& T, int x) {
    if (x < 1) throw std::invalid_argument("insert: entry must be positive");
    if (T.empty()) return Tableau({{x}});
    if (!is_framed(T)) throw std::invalid_argument("insert: tableau is not framed");
    if (x > T.at(1, 1))
        throw std::invalid_argument("insert: entry exceeds the smallest entry of the tableau");

    // Step 1: bumping pass
    auto rows = T.rows();
    int cur = x;
    std::size_t i = 0;
    while (i < rows.size() && rows[i].back() >= cur + 2) {
        auto& row = rows[i];
        auto it = std::find_if(row.begin(), row.end(),
                               [&](int v) { return v >= cur + 2; });
        int bumped = *it;
        *it = cur;
        std::sort(row.begin(), row.end());
        cur = bumped;
        ++i;
    }
    if (i == rows.size()) rows.emplace_back();
    rows[i].push_back(cur);
    std::sort(rows[i].begin(), rows[i].end());

    // Step 2: row sums
    const Partition mu_prime = detail::grid_shape(rows);
    const std::vector<int> s_prime = detail::transfer_row_sums(rows, x, false);

    // Step 3
    return fram(mu_prime, s_prime);
}

// Remove the smallest entry x = t(1,1): slide the hole through the
// tableau (right while the upper neighbor is at least two above the
// right one, otherwise pulling the upper neighbor down and re-sorting
// the row), transfer row sums, then reframe. Returns (x, rest).
inline std::pair<int, Tableau> remove_min(const Tableau& T) {
    if (T.empty()) throw std::invalid_argument("remove: empty tableau");
    if (!is_framed(T)) throw std::invalid_argument("remove: tableau is not framed");

    auto rows = T.rows();
    const int x = rows[0][0];

    // Step 1: the taquin slide; (i, j) tracks the hole, whose stale
    // content is never read.
    std::size_t i = 0, j = 0;
    auto has_above = [&rows](std::size_t ii, std::size_t jj) {
        return ii + 1 < rows.size() && jj < rows[ii + 1].size();
    };
    auto has_right = [&rows](std::size_t ii, std::size_t jj) {
        return jj + 1 < rows[ii].size();
    };
    while (has_above(i, j) || has_right(i, j)) {
        if (has_right(i, j) &&
            (!has_above(i, j) || rows[i + 1][j] >= rows[i][j + 1] + 2)) {
            rows[i][j] = rows[i][j + 1];
            ++j;
        }
        if (has_above(i, j) &&
            (!has_right(i, j) || rows[i + 1][j] <= rows[i][j + 1] + 1)) {
            rows[i][j] = rows[i + 1][j];
            std::sort(rows[i].begin(), rows[i].end());
            ++i;
        }
    }
    // the hole stops at the tail of a row with nothing above it
    rows[i].pop_back();
    if (rows[i].empty()) rows.erase(rows.begin() + static_cast<long>(i));

    if (rows.empty()) return {x, Tableau()};

    // Step 2: row sums
    const Partition mu_prime = detail::grid_shape(rows);
    const std::vector<int> s_prime = detail::transfer_row_sums(rows, x, true);

    // Step 3
    return {x, fram(mu_prime, s_prime)};
}

// Inserting the parts of a partition left to right builds a framed
// tableau with cell count = number of parts and weight = partition size.
inline Tableau partition_to_tableau(const Partition& lambda) {
    Tableau t;
    for (int p : lambda.parts()) t = insert(t, p);
    return t;
}

// Removing entries until empty and reading the records backwards
// recovers the partition.
inline Partition tableau_to_partition(const Tableau& T) {
    std::vector<int> removed;
    Tableau cur = T;
    while (!cur.empty()) {
        auto [x, rest] = remove_min(cur);
        removed.push_back(x);
        cur = std::move(rest);
    }
    std::reverse(removed.begin(), removed.end());
    return Partition(std::move(removed));
}

// All framed tableaux of weight k with l cells, one per partition of k
// into l parts.
inline std::vector<Tableau> enumerate_framed(int k, int l) {
    std::vector<Tableau> out;
    for (const Partition& lambda : partitions_with_parts(k, l))
        out.push_back(partition_to_tableau(lambda));
    return out;
}

}  // namespace qtcat
