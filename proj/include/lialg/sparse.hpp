// Sparse exact linear algebra over Q.
//
// Ranks are computed by integer fraction-free row elimination: each row is
// scaled to integers, reduced against the frozen pivot rows in column order
// (pivot = first non-zero entry), and renormalized by its content after every
// step. Pivot rows are never modified once registered, so fill-in is confined
// to the row being reduced and coefficient growth stays bounded.
#pragma once

#include "lialg/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace lialg {

class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add(int r, int c, const Rat& v) {
        if (v == 0) return;
        auto& row = data_[static_cast<std::size_t>(r)];
        auto [it, inserted] = row.emplace(c, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) row.erase(it);
        }
    }

    const std::map<int, Rat>& row(int r) const { return data_[static_cast<std::size_t>(r)]; }

    Rat at(int r, int c) const {
        const auto& row = data_[static_cast<std::size_t>(r)];
        auto it = row.find(c);
        return it == row.end() ? Rat(0) : it->second;
    }

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& r : data_) n += r.size();
        return n;
    }

    bool is_zero() const { return nonzeros() == 0; }

    // this (rows x cols) * rhs (rhs.rows x rhs.cols); requires cols == rhs.rows.
    SparseMatrix multiply(const SparseMatrix& rhs) const {
        SparseMatrix out(rows_, rhs.cols_);
        for (int i = 0; i < rows_; ++i)
            for (const auto& [k, v] : data_[static_cast<std::size_t>(i)])
                for (const auto& [c, w] : rhs.data_[static_cast<std::size_t>(k)])
                    out.add(i, c, v * w);
        return out;
    }

    std::vector<std::map<int, Rat>> columns() const {
        std::vector<std::map<int, Rat>> cols(static_cast<std::size_t>(cols_));
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : data_[static_cast<std::size_t>(r)])
                cols[static_cast<std::size_t>(c)].emplace(r, v);
        return cols;
    }

    int rank() const {
        using IRow = std::vector<std::pair<int, Int>>;
        std::vector<IRow> pivot_rows;
        std::map<int, std::size_t> pivot_at;  // leading column -> index into pivot_rows

        auto content_normalize = [](IRow& row) {
            if (row.empty()) return;
            Int g = 0;
            for (const auto& [c, v] : row) {
                g = boost::multiprecision::gcd(g, v);
                if (g == 1) break;
            }
            if (g > 1)
                for (auto& [c, v] : row) v /= g;
        };

        for (int r = 0; r < rows_; ++r) {
            const auto& src = data_[static_cast<std::size_t>(r)];
            if (src.empty()) continue;
            Int scale = 1;
            for (const auto& [c, v] : src)
                scale = boost::multiprecision::lcm(scale, Int(denominator(v)));
            IRow row;
            row.reserve(src.size());
            for (const auto& [c, v] : src)
                row.emplace_back(c, Int(numerator(v)) * (scale / Int(denominator(v))));
            content_normalize(row);

            while (!row.empty()) {
                int lead = row.front().first;
                auto it = pivot_at.find(lead);
                if (it == pivot_at.end()) {
                    pivot_at.emplace(lead, pivot_rows.size());
                    pivot_rows.push_back(std::move(row));
                    break;
                }
                const IRow& p = pivot_rows[it->second];
                // row <- p_lead * row - row_lead * p  (cancels the lead column)
                Int a = row.front().second, b = p.front().second;
                IRow merged;
                merged.reserve(row.size() + p.size());
                std::size_t i = 0, j = 0;
                while (i < row.size() || j < p.size()) {
                    if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
                        merged.emplace_back(row[i].first, b * row[i].second);
                        ++i;
                    } else if (i == row.size() || p[j].first < row[i].first) {
                        merged.emplace_back(p[j].first, -a * p[j].second);
                        ++j;
                    } else {
                        Int v = b * row[i].second - a * p[j].second;
                        if (v != 0) merged.emplace_back(row[i].first, std::move(v));
                        ++i, ++j;
                    }
                }
                row = std::move(merged);
                content_normalize(row);
            }
        }
        return static_cast<int>(pivot_rows.size());
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::map<int, Rat>> data_;
};

// Incremental column reduction over Q with optional combination tracking.
// Pivot of a column is its first (smallest row index) non-zero entry.
class ColumnSpan {
public:
    explicit ColumnSpan(bool track = false) : track_(track) {}

    int rank() const { return static_cast<int>(cols_.size()); }

    // Reduces col against the span. Returns the combination expressing col in
    // terms of previously added source columns when it reduces to zero
    // (nullopt in untracked mode); otherwise registers col as a new pivot
    // column and returns nothing. source_id tags the column in combinations.
    std::optional<std::map<int, Rat>> add(std::map<int, Rat> col, int source_id) {
        std::map<int, Rat> combo;
        if (track_) combo.emplace(source_id, Rat(1));
        while (!col.empty()) {
            int lead = col.begin()->first;
            auto it = pivot_of_row_.find(lead);
            if (it == pivot_of_row_.end()) {
                pivot_of_row_.emplace(lead, cols_.size());
                cols_.push_back(std::move(col));
                combos_.push_back(std::move(combo));
                return std::nullopt;
            }
            std::size_t pi = it->second;
            Rat f = col.begin()->second / cols_[pi].begin()->second;
            axpy(col, -f, cols_[pi]);
            if (track_) axpy(combo, -f, combos_[pi]);
        }
        // col reduced to zero: it lies in the span of earlier columns
        return track_ ? std::optional(std::move(combo)) : std::optional(std::map<int, Rat>{});
    }

    bool contains(std::map<int, Rat> col) const {
        while (!col.empty()) {
            auto it = pivot_of_row_.find(col.begin()->first);
            if (it == pivot_of_row_.end()) return false;
            Rat f = col.begin()->second / cols_[it->second].begin()->second;
            axpy(col, -f, cols_[it->second]);
        }
        return true;
    }

private:
    static void axpy(std::map<int, Rat>& dst, const Rat& f, const std::map<int, Rat>& src) {
        for (const auto& [r, v] : src) {
            auto [it, inserted] = dst.emplace(r, f * v);
            if (!inserted) {
                it->second += f * v;
                if (it->second == 0) dst.erase(it);
            }
        }
    }

    bool track_;
    std::map<int, std::size_t> pivot_of_row_;
    std::vector<std::map<int, Rat>> cols_;
    std::vector<std::map<int, Rat>> combos_;
};

// Basis of the null space of M, as coordinate maps over column indices.
// Deterministic: columns are processed left to right.
inline std::vector<std::map<int, Rat>> kernel_basis(const SparseMatrix& M) {
    ColumnSpan span(/*track=*/true);
    std::vector<std::map<int, Rat>> kernel;
    auto cols = M.columns();
    for (int c = 0; c < M.cols(); ++c)
        if (auto combo = span.add(std::move(cols[static_cast<std::size_t>(c)]), c))
            kernel.push_back(std::move(*combo));
    return kernel;
}

}  // namespace lialg
