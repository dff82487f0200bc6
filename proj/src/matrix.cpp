#include "sosq/matrix.hpp"

#include <stdexcept>

namespace sosq {

Mat mat_zero(size_t rows, size_t cols) { return Mat(rows, Vec(cols, Rational(0))); }

Mat mat_identity(size_t nn) {
  Mat m = mat_zero(nn, nn);
  for (size_t i = 0; i < nn; ++i) m[i][i] = 1;
  return m;
}

Mat mat_transpose(const Mat& a) {
  if (a.empty()) return a;
  Mat t = mat_zero(a[0].size(), a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.empty() || b.empty()) return {};
  if (a[0].size() != b.size()) throw std::invalid_argument("mat_mul: shape mismatch");
  Mat c = mat_zero(a.size(), b[0].size());
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < b[0].size(); ++j) {
        if (b[k][j] == 0) continue;
        c[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return c;
}

Vec mat_vec(const Mat& a, const Vec& v) {
  if (!a.empty() && a[0].size() != v.size()) throw std::invalid_argument("mat_vec: shape mismatch");
  Vec out(a.size(), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < v.size(); ++j) {
      if (a[i][j] == 0 || v[j] == 0) continue;
      out[i] += a[i][j] * v[j];
    }
  }
  return out;
}

Mat mat_add(const Mat& a, const Mat& b) {
  if (a.size() != b.size()) throw std::invalid_argument("mat_add: shape mismatch");
  Mat c = a;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) throw std::invalid_argument("mat_add: shape mismatch");
    for (size_t j = 0; j < a[i].size(); ++j) c[i][j] += b[i][j];
  }
  return c;
}

Mat mat_scale(const Mat& a, const Rational& s) {
  Mat c = a;
  for (auto& row : c) {
    for (auto& v : row) v *= s;
  }
  return c;
}

bool mat_equal(const Mat& a, const Mat& b) { return a == b; }

size_t mat_rank(Mat a) {
  if (a.empty()) return 0;
  size_t rows = a.size(), cols = a[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (size_t i = rank + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      Rational f = a[i][col] / a[rank][col];
      for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::optional<Mat> mat_inverse(const Mat& a) {
  size_t nn = a.size();
  Mat work = a;
  Mat inv = mat_identity(nn);
  for (size_t col = 0; col < nn; ++col) {
    size_t pivot = col;
    while (pivot < nn && work[pivot][col] == 0) ++pivot;
    if (pivot == nn) return std::nullopt;
    std::swap(work[pivot], work[col]);
    std::swap(inv[pivot], inv[col]);
    Rational d = work[col][col];
    for (size_t j = 0; j < nn; ++j) {
      work[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t i = 0; i < nn; ++i) {
      if (i == col || work[i][col] == 0) continue;
      Rational f = work[i][col];
      for (size_t j = 0; j < nn; ++j) {
        work[i][j] -= f * work[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

LdlResult ldl_psd_check(Mat a) {
  LdlResult res;
  size_t nn = a.size();
  for (const auto& row : a) {
    if (row.size() != nn) throw std::invalid_argument("ldl_psd_check: not square");
  }
  for (size_t i = 0; i < nn; ++i) {
    for (size_t j = i + 1; j < nn; ++j) {
      if (a[i][j] != a[j][i]) throw std::invalid_argument("ldl_psd_check: not symmetric");
    }
  }
  res.perm.resize(nn);
  for (size_t i = 0; i < nn; ++i) res.perm[i] = i;
  res.lower = mat_identity(nn);
  res.diag.assign(nn, Rational(0));
  for (size_t k = 0; k < nn; ++k) {
    // Symmetric pivot: largest remaining diagonal entry.
    size_t best = k;
    for (size_t i = k + 1; i < nn; ++i) {
      if (a[i][i] > a[best][best]) best = i;
    }
    if (best != k) {
      std::swap(res.perm[k], res.perm[best]);
      std::swap(a[k], a[best]);
      for (size_t i = 0; i < nn; ++i) std::swap(a[i][k], a[i][best]);
      for (size_t j = 0; j < k; ++j) std::swap(res.lower[k][j], res.lower[best][j]);
    }
    Rational d = a[k][k];
    if (d < 0) {
      res.psd = false;
      res.fail_index = static_cast<long>(k);
      return res;
    }
    if (d == 0) {
      // Remaining row/column must vanish, else an indefinite 2x2 block exists.
      for (size_t j = k + 1; j < nn; ++j) {
        if (a[k][j] != 0) {
          res.psd = false;
          res.fail_index = static_cast<long>(k);
          return res;
        }
      }
      res.diag[k] = 0;
      continue;
    }
    res.diag[k] = d;
    for (size_t i = k + 1; i < nn; ++i) res.lower[i][k] = a[i][k] / d;
    for (size_t i = k + 1; i < nn; ++i) {
      if (res.lower[i][k] == 0) continue;
      for (size_t j = k + 1; j < nn; ++j) {
        if (res.lower[j][k] == 0) continue;
        a[i][j] -= res.lower[i][k] * d * res.lower[j][k];
      }
    }
  }
  res.psd = true;
  return res;
}

}  // namespace sosq
