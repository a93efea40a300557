#pragma once

#include <cstddef>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nbhd {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using DenseMatrix = std::vector<std::vector<Integer>>;

struct MatrixEntry {
    std::size_t col;
    Integer value;

    bool operator==(const MatrixEntry&) const = default;
};

/// Exact integer matrix, stored as sorted sparse rows without explicit zeros.
class IntegerMatrix {
public:
    using Row = std::vector<MatrixEntry>;

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);

    static IntegerMatrix from_dense(const DenseMatrix& dense, std::size_t cols = 0);
    static IntegerMatrix from_rows(std::size_t cols, std::vector<Row> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nonzeros() const;
    const Row& row(std::size_t r) const { return data_[r]; }

    Integer at(std::size_t r, std::size_t c) const;
    DenseMatrix to_dense() const;
    bool is_zero() const;

    bool operator==(const IntegerMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Row> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix identity_matrix(std::size_t n);

}  // namespace nbhd
