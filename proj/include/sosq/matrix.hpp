#pragma once

// Small dense exact matrices over Rational: just enough linear algebra for
// the subset-inclusion operators, exact solves, rank, and PSD checks.

#include <optional>
#include <vector>

#include "sosq/rational.hpp"

namespace sosq {

using Mat = std::vector<std::vector<Rational>>;
using Vec = std::vector<Rational>;

Mat mat_zero(size_t rows, size_t cols);
Mat mat_identity(size_t nn);
Mat mat_transpose(const Mat& a);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& a, const Vec& v);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_scale(const Mat& a, const Rational& s);
bool mat_equal(const Mat& a, const Mat& b);

// Exact rank by Gaussian elimination.
size_t mat_rank(Mat a);

// Exact inverse via Gauss-Jordan; nullopt when singular.
std::optional<Mat> mat_inverse(const Mat& a);

// Exact LDL^T with symmetric pivoting on the largest remaining diagonal
// entry. psd == true iff the symmetric input is positive semidefinite
// (every pivot >= 0; a zero pivot forces its whole remaining row to vanish).
struct LdlResult {
  bool psd = false;
  std::vector<size_t> perm;
  Mat lower;
  Vec diag;
  // Index of the offending pivot when psd is false, else -1.
  long fail_index = -1;
};
LdlResult ldl_psd_check(Mat a);

}  // namespace sosq
