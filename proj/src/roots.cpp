#include "partzeta/roots.hpp"

#include <algorithm>

namespace pz {

namespace {

// p(z) and p'(z) in one Horner sweep.
void eval_with_derivative(const std::vector<HPComplex>& c, const HPComplex& z, HPComplex& p, HPComplex& dp) {
  p = c.back();
  dp = HPComplex(HPReal(0));
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
}

HPReal fujiwara_bound(const std::vector<HPComplex>& c) {
  const std::size_t n = c.size() - 1;
  const HPReal lead = abs(c[n]);
  HPReal best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    HPReal r = abs(c[n - i]) / lead;
    if (i == n) r /= 2;
    if (r == 0) continue;
    best = std::max(best, HPReal(pow(r, HPReal(1) / HPReal(static_cast<long>(i)))));
  }
  return std::max(HPReal(1), 2 * best);
}

}  // namespace

RootResult poly_roots(const PolyC& p, unsigned max_iterations) {
  if (p.degree() < 1) throw DomainError("poly_roots needs degree >= 1");
  const unsigned target_bits = WorkingPrecision::current_bits();
  RootResult out;
  {
    WorkingPrecision wp(target_bits + 32);
    std::vector<HPComplex> c;
    for (const auto& v : p.coefficients()) c.push_back(rounded(v));
    const std::size_t n = c.size() - 1;

    // Strip exact zero roots; they would otherwise stall the iteration.
    std::size_t zeros = 0;
    while (zeros < n && c[zeros] == HPComplex(HPReal(0))) ++zeros;
    c.erase(c.begin(), c.begin() + static_cast<long>(zeros));
    const std::size_t m = c.size() - 1;

    std::vector<HPComplex> z(m);
    if (m > 0) {
      const HPReal radius = fujiwara_bound(c);
      const HPReal two_pi = 2 * pi_hp();
      for (std::size_t k = 0; k < m; ++k) {
        HPReal angle = two_pi * (HPReal(static_cast<long>(k)) + HPReal(0.25)) / HPReal(static_cast<long>(m)) + HPReal(0.4);
        // Slight radial stagger keeps the start from being symmetric under conjugation.
        HPReal r = radius * (1 + HPReal(static_cast<long>(k % 3)) / 100);
        z[k] = HPComplex(r * cos(angle), r * sin(angle));
      }
    }
    const HPReal eps = pow2_neg(static_cast<long>(target_bits) + 8);
    std::vector<bool> done(m, false);
    unsigned it = 0;
    bool all_done = (m == 0);
    for (; it < max_iterations && !all_done; ++it) {
      all_done = true;
      for (std::size_t k = 0; k < m; ++k) {
        if (done[k]) continue;
        HPComplex pv, dv;
        eval_with_derivative(c, z[k], pv, dv);
        if (pv == HPComplex(HPReal(0))) {
          done[k] = true;
          continue;
        }
        HPComplex ratio = pv / dv;
        HPComplex repulsion(HPReal(0));
        for (std::size_t j = 0; j < m; ++j)
          if (j != k) repulsion += HPComplex(HPReal(1)) / (z[k] - z[j]);
        HPComplex step = ratio / (HPComplex(HPReal(1)) - ratio * repulsion);
        z[k] -= step;
        if (abs(step) <= eps * std::max(HPReal(1), abs(z[k])))
          done[k] = true;
        else
          all_done = false;
      }
    }
    out.iterations = it;
    out.converged = all_done;
    for (std::size_t k = 0; k < zeros; ++k) z.push_back(HPComplex(HPReal(0)));
    std::sort(z.begin(), z.end(), [](const HPComplex& a, const HPComplex& b) {
      if (a.im != b.im) return a.im < b.im;
      return a.re < b.re;
    });
    for (const auto& r : z) {
      out.roots.push_back(r);
      out.residuals.push_back(abs(p(r)));
    }
  }
  for (auto& r : out.roots) r = rounded(r);
  for (auto& r : out.residuals) {
    r = rounded(r);
    out.max_residual = std::max(out.max_residual, r);
  }
  return out;
}

std::vector<HPComplex> poly_roots_checked(const PolyC& p) {
  auto r = poly_roots(p);
  if (!r.converged) throw NumericFailure("poly_roots: Aberth iteration did not converge");
  return r.roots;
}

}  // namespace pz
