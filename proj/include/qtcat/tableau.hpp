#pragma once

#include <qtcat/partition.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtcat {

// A column-strict tableau. Rows are stored bottom-up: rows()[0] is the
// bottom row and (1,1) addresses its leftmost cell. Entries weakly
// increase along rows and strictly increase up columns; the shape is a
// partition. The empty tableau is allowed.
class Tableau {
public:
    Tableau() = default;

    Tableau(std::initializer_list<std::vector<int>> rows)
        : Tableau(std::vector<std::vector<int>>(rows)) {}

    explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto& row = rows_[i];
            if (row.empty())
                throw std::invalid_argument("tableau: empty row below a non-empty one");
            if (i > 0 && rows_[i - 1].size() < row.size())
                throw std::invalid_argument("tableau: shape is not a partition");
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (row[j] < 1)
                    throw std::invalid_argument("tableau: entries must be positive");
                if (j > 0 && row[j] < row[j - 1])
                    throw std::invalid_argument("tableau: row entries must weakly increase");
                if (i > 0 && rows_[i - 1][j] >= row[j])
                    throw std::invalid_argument("tableau: column entries must strictly increase");
            }
        }
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    int row_count() const { return static_cast<int>(rows_.size()); }

    Partition shape() const {
        std::vector<int> mu;
        mu.reserve(rows_.size());
        for (const auto& row : rows_) mu.push_back(static_cast<int>(row.size()));
        return Partition(std::move(mu));
    }

    std::vector<int> row_sums() const {
        std::vector<int> s;
        s.reserve(rows_.size());
        for (const auto& row : rows_)
            s.push_back(std::accumulate(row.begin(), row.end(), 0));
        return s;
    }

    // |s(T)|: the sum of all entries
    long long weight() const {
        long long w = 0;
        for (const auto& row : rows_)
            for (int v : row) w += v;
        return w;
    }

    // |mu(T)|: the number of cells
    int cell_count() const {
        int c = 0;
        for (const auto& row : rows_) c += static_cast<int>(row.size());
        return c;
    }

    // 1-based lookup; 0 encodes the out-of-shape "infinity" sentinel,
    // callers compare through has_cell first.
    bool has_cell(int i, int j) const {
        return i >= 1 && i <= row_count() && j >= 1 &&
               j <= static_cast<int>(rows_[i - 1].size());
    }

    int at(int i, int j) const {
        if (!has_cell(i, j)) throw std::out_of_range("tableau cell out of shape");
        return rows_[i - 1][j - 1];
    }

    // column j (1-based), bottom-up; strictly increasing by column-strictness
    std::vector<int> column(int j) const {
        std::vector<int> col;
        for (const auto& row : rows_) {
            if (j > static_cast<int>(row.size())) break;
            col.push_back(row[j - 1]);
        }
        return col;
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau& a, const Tableau& b) {
        return a.rows_ <=> b.rows_;
    }

private:
    std::vector<std::vector<int>> rows_;
};

// Box layout with the bottom row printed last, matching the usual
// pictures.
inline std::string render(const Tableau& t) {
    if (t.empty()) return "(empty tableau)\n";
    int width = 1;
    for (const auto& row : t.rows())
        for (int v : row) width = std::max(width, static_cast<int>(std::to_string(v).size()));
    std::string out;
    for (int i = t.row_count(); i >= 1; --i) {
        for (int v : t.rows()[i - 1]) {
            std::string cell = std::to_string(v);
            out += std::string(width - cell.size() + 1, ' ') + cell;
        }
        out += "\n";
    }
    return out;
}

}  // namespace qtcat
