#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtcat {

// One cell of a lattice diagram: x holds the x-exponent, y the
// y-exponent. Negative coordinates are representable (operators
// produce them transiently); a diagram containing one collapses to
// the zero alternant.
struct Cell {
    int x = 0;
    int y = 0;

    bool valid() const { return x >= 0 && y >= 0; }

    // cells compare by (y, then x)
    friend bool operator==(const Cell&, const Cell&) = default;
    friend std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
};

// An ordered list of n cells. Any list qualifies; a diagram is
// degenerate (its determinant vanishes) iff it repeats a cell or
// contains an invalid one.
struct LatticeDiagram {
    std::vector<Cell> cells;

    LatticeDiagram() = default;
    explicit LatticeDiagram(std::vector<Cell> c) : cells(std::move(c)) {}

    int size() const { return static_cast<int>(cells.size()); }

    // (total x-degree, total y-degree)
    std::pair<long long, long long> bidegree() const {
        long long dx = 0, dy = 0;
        for (const Cell& c : cells) {
            dx += c.x;
            dy += c.y;
        }
        return {dx, dy};
    }

    friend bool operator==(const LatticeDiagram&, const LatticeDiagram&) = default;
};

// Sorts the cells by (y, then x) and reports the sign of the permutation
// that does it; sign 0 flags a degenerate diagram (repeated or invalid cell).
inline std::pair<LatticeDiagram, int> sort_diagram(const LatticeDiagram& L) {
    const int n = L.size();
    for (const Cell& c : L.cells)
        if (!c.valid()) return {LatticeDiagram{}, 0};

    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return L.cells[a] < L.cells[b];
    });

    LatticeDiagram sorted;
    sorted.cells.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (i > 0 && L.cells[idx[i]] == L.cells[idx[i - 1]])
            return {LatticeDiagram{}, 0};
        sorted.cells.push_back(L.cells[idx[i]]);
    }

    // parity of idx = parity of the reordering; O(n^2) is fine at this scale
    int inversions = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (idx[i] > idx[j]) ++inversions;

    return {std::move(sorted), inversions % 2 == 0 ? 1 : -1};
}

// End-anchored lexicographic order on sorted diagrams: the highest
// index where the lists differ decides, cells comparing by (y, x).
inline std::strong_ordering compare_diagrams(const LatticeDiagram& A,
                                             const LatticeDiagram& B) {
    if (A.size() != B.size())
        throw std::invalid_argument("compare_diagrams: diagrams of different sizes");
    for (int i = A.size() - 1; i >= 0; --i) {
        if (auto c = A.cells[i] <=> B.cells[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

struct DiagramPrec {
    bool operator()(const LatticeDiagram& a, const LatticeDiagram& b) const {
        return compare_diagrams(a, b) < 0;
    }
};

inline std::string to_string(const Cell& c) {
    return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

inline std::string to_string(const LatticeDiagram& L) {
    std::string s = "[";
    for (int i = 0; i < L.size(); ++i) {
        if (i) s += ",";
        s += to_string(L.cells[i]);
    }
    return s + "]";
}

}  // namespace qtcat
