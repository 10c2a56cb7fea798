#pragma once

#include <vector>

#include "partzeta/polynomial.hpp"

namespace pz {

struct RootResult {
  std::vector<HPComplex> roots;  // sorted by imaginary part, then real part
  std::vector<HPReal> residuals; // |p(root)|
  HPReal max_residual{0};
  unsigned iterations = 0;
  bool converged = false;
};

/// All complex roots of p with multiplicity by Aberth-Ehrlich iteration.
/// Initial guesses sit on a circle whose radius is the Fujiwara bound (at
/// least 1), at deterministic angles. Non-convergence is reported through
/// `converged` and the partial iterates are returned, never thrown away.
RootResult poly_roots(const PolyC& p, unsigned max_iterations = 1000);

/// poly_roots, throwing NumericFailure if it did not converge.
std::vector<HPComplex> poly_roots_checked(const PolyC& p);

}  // namespace pz
