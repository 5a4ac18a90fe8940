#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rrb {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<BigInt>>;

/// U * M * V = diag(diagonal) with d_1 | d_2 | ... and d_i >= 0.
/// Only the column transform V and its inverse are tracked.
struct SmithForm {
  std::vector<BigInt> diagonal;  ///< length min(rows, cols)
  BigMatrix V;
  BigMatrix V_inv;
};

SmithForm smith_normal_form(const BigMatrix& m, std::size_t cols);

BigMatrix identity_matrix(std::size_t n);
std::vector<BigInt> row_times(const std::vector<BigInt>& row, const BigMatrix& m);

}  // namespace rrb
