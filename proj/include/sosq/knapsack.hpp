#pragma once

// Positivstellensatz refutations of the non-integer knapsack system
//   sum_i x_i - r = 0,  x_i^2 - x_i = 0,
// built from the falling-factorial decomposition
//   A_m(x) = sum_i (x_i^2 - x_i) g_i(x) + m! e_m(x_1^2,...,x_n^2)
// and verified either by full expansion or by seeded random evaluation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sosq/multipoly.hpp"
#include "sosq/unipoly.hpp"

namespace sosq {

struct AkDecomposition {
  int n = 0, k = 0;
  std::vector<MultiPoly> g_list;  // multipliers of x_i^2 - x_i
  MultiPoly ek_sq;                // k! e_k(x_1^2,...,x_n^2)
};

// A_k(x) == sum_i (x_i^2-x_i) g_list[i] + ek_sq, with deg g_i <= 2k-2.
// The identity is re-verified by expansion when n is small enough.
AkDecomposition a_k_decomposition(int n, int k);

// h = multiplier * sum_i squares[i]^2; squares are stored explicitly for
// n <= 10, otherwise h is the symbolic scale * e_{set_size}(x^2).
struct HSos {
  Rational scale;       // (k+2)!/b
  Rational multiplier;  // positive scalar left outside the squares
  int set_size = 0;     // k+2
  std::vector<MultiPoly> squares;
};

struct Refutation {
  int n = 0, k = 0;
  Rational r;
  UniPoly g_uni;  // g(x) = g_uni(sum_i x_i)
  std::optional<MultiPoly> g_expanded;
  std::vector<MultiPoly> g_list;
  HSos h;
  int degree = 0;
};

// Degree-(2k+4) refutation for non-integer r in (k, k+1).
Refutation knapsack_refutation(int n, int k, const Rational& r);

enum class VerifyMode { expand, random_eval };

struct RefutationReport {
  bool ok = false;
  bool identity_ok = false;
  bool h_sos_ok = false;
  bool degree_ok = false;
  int recomputed_degree = 0;
  std::string detail;
  std::string soundness;
};

RefutationReport verify_refutation(const Refutation& ref, VerifyMode mode, uint64_t seed);

// e_k evaluated at the squared coordinates of a point, O(n k) DP.
Rational elementary_symmetric_squares_at(const std::vector<Rational>& point, int k);

// Evaluate the refutation's g at a point.
Rational refutation_g_at(const Refutation& ref, const std::vector<Rational>& point);

}  // namespace sosq
