#pragma once

#include <string>

#include "partzeta/complex.hpp"

namespace pz::testing {

inline bool close(const HPReal& a, const HPReal& b, const HPReal& tol) { return abs(a - b) <= tol; }
inline bool close(const HPComplex& a, const HPComplex& b, const HPReal& tol) { return abs(a - b) <= tol; }
inline bool rel_close(const HPReal& a, const HPReal& b, const HPReal& tol) {
  return abs(a - b) <= tol * (abs(b) > 1 ? HPReal(abs(b)) : HPReal(1));
}
inline std::string show(const HPReal& x) { return format_decimal(x, 30); }

}  // namespace pz::testing
