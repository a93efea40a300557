#pragma once

#include <vector>

#include "nbhd/integer_matrix.hpp"

namespace nbhd {

struct SnfResult {
    std::vector<Integer> invariant_factors;  // d_1 | d_2 | ... | d_r, all positive
    std::size_t rank = 0;

    bool operator==(const SnfResult&) const = default;
};

/// Smith normal form by sparse elimination.
///
/// Pivots are nonzero entries of minimum absolute value (ties: smallest
/// Markowitz cost, then row, then column). Euclidean row and column steps
/// shrink the pivot until it divides its row and column; the diagonal left
/// behind is then normalized into a divisibility chain.
SnfResult smith_normal_form(const IntegerMatrix& m);

struct SnfWitness {
    SnfResult snf;
    DenseMatrix u;         // rows x rows, unimodular
    DenseMatrix diagonal;  // rows x cols, u * m * v
    DenseMatrix v;         // cols x cols, unimodular
};

/// Dense variant that also records unimodular transforms with u * m * v = diagonal.
/// Meant for small matrices.
SnfWitness smith_normal_form_with_transforms(const IntegerMatrix& m);

/// Sorts diagonal entries into invariant-factor order (pairwise gcd/lcm).
std::vector<Integer> normalize_diagonal(std::vector<Integer> diagonal);

}  // namespace nbhd
