#pragma once

#include <string>
#include <vector>

#include "partzeta/common.hpp"

namespace pz {

/// r * pi^p with r exact.
struct PiMultiple {
  Rational coefficient;
  long pi_power = 0;

  HPReal value() const;
  std::string to_string() const;  // "31/15120 * pi^6"
  friend bool operator==(const PiMultiple&, const PiMultiple&) = default;
};

/// Sum of (n_1 ... n_k)^(-m) over n_1 >= ... >= n_k >= 1, from the
/// coefficient of u^k in exp(sum_j zeta(m j) u^j / j). Exact when m is even.
HPReal fixedlen_zeta(unsigned m, unsigned k);

/// Exact rational route for even m: (1/k!) det of the k x k Hessenberg matrix
/// alpha(i,j) = zeta(m(j-i+1)) (k-i)! / (pi^(m(j-i+1)) (k-j)!).
PiMultiple fixedlen_zeta_exact(unsigned m, unsigned k);
/// Same value from the exact series exponential.
PiMultiple fixedlen_zeta_series_exact(unsigned m, unsigned k);

/// zeta({n}^k), strict inequalities: (-1)^k [u^k] exp(-sum_j zeta(n j) u^j / j).
HPReal mzv_equal_args(unsigned n, unsigned k);
PiMultiple mzv_equal_args_exact(unsigned n, unsigned k);        // series, even n
PiMultiple mzv_equal_args_determinant(unsigned n, unsigned k);  // beta determinant, even n

struct TruncatedSum {
  HPReal value;
  HPReal tail_estimate;  // crude, from the outermost variable only
  std::string note;
};

/// Nested sum over bound >= n_1 > n_2 > ... > n_k >= 1 of prod n_i^(-index_i).
TruncatedSum mzv_bruteforce(const std::vector<unsigned>& index, unsigned long bound);

/// All 2^(k-1) compositions of k in lexicographic order.
std::vector<std::vector<unsigned>> compositions(unsigned k);

struct IdentityCheck {
  HPReal lhs, rhs, diff, tail_estimate;
};

/// Weak-inequality double sum against (zeta(2s) + zeta(s)^2)/2.
IdentityCheck shuffle_check(const HPReal& s, unsigned long bound);

/// fixedlen_zeta(m,k) against the sum over compositions (a_1..a_j) of k of
/// zeta(a_1 m, ..., a_j m), each with coefficient 1, by brute force.
IdentityCheck decoupling_check(unsigned m, unsigned k, unsigned long bound);

struct LengthReduction {
  unsigned n = 0, k = 0;
  std::vector<std::vector<unsigned>> subtracted;  // MZV indices with coefficient -1
  std::string identity;
  IdentityCheck numeric;  // lhs = brute zeta({n}^k), rhs = fixedlen - brute lower-length terms
  /// The same rearrangement with the fixed-length sum also truncated at `bound`.
  /// Truncation errors then cancel term by term, so only rounding remains.
  IdentityCheck truncated;
  bool exact_available = false;
  bool exact_match = false;  // k = 2 with n even: both sides as rational pi multiples
};

LengthReduction length_reduction(unsigned n, unsigned k, unsigned long bound);

}  // namespace pz
