#include "nbhd/integer_matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nbhd {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

IntegerMatrix IntegerMatrix::from_dense(const DenseMatrix& dense, std::size_t cols) {
    if (!dense.empty()) cols = dense.front().size();
    IntegerMatrix m(dense.size(), cols);
    for (std::size_t r = 0; r < dense.size(); ++r) {
        if (dense[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
        for (std::size_t c = 0; c < cols; ++c)
            if (dense[r][c] != 0) m.data_[r].push_back({c, dense[r][c]});
    }
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::size_t cols, std::vector<Row> rows) {
    IntegerMatrix m(rows.size(), cols);
    for (auto& row : rows) {
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i].col >= cols) throw std::invalid_argument("column index out of range");
            if (i > 0 && row[i - 1].col == row[i].col) throw std::invalid_argument("duplicate entry");
        }
        std::erase_if(row, [](const MatrixEntry& e) { return e.value == 0; });
    }
    m.data_ = std::move(rows);
    return m;
}

std::size_t IntegerMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

Integer IntegerMatrix::at(std::size_t r, std::size_t c) const {
    const auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const MatrixEntry& e, std::size_t col) { return e.col < col; });
    return it != row.end() && it->col == c ? it->value : Integer(0);
}

DenseMatrix IntegerMatrix::to_dense() const {
    DenseMatrix d(rows_, std::vector<Integer>(cols_, 0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& e : data_[r]) d[r][e.col] = e.value;
    return d;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Row& r) { return r.empty(); });
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
    std::vector<IntegerMatrix::Row> rows(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::map<std::size_t, Integer> acc;
        for (const auto& e : a.row(r))
            for (const auto& f : b.row(e.col)) acc[f.col] += e.value * f.value;
        for (auto& [c, v] : acc)
            if (v != 0) rows[r].push_back({c, std::move(v)});
    }
    return IntegerMatrix::from_rows(b.cols(), std::move(rows));
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b.front().size();
    DenseMatrix c(n, std::vector<Integer>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

DenseMatrix identity_matrix(std::size_t n) {
    DenseMatrix id(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

}  // namespace nbhd
