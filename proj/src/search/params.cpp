#include "dynmwm/search/params.hpp"

#include <algorithm>
#include <cmath>

#include "dynmwm/graph/types.hpp"

namespace dynmwm {

PhaseParams PhaseParams::make(double eps, double h, double beta) {
  if (!(eps > 0 && eps < 1)) throw ContractViolation("phase search needs 0 < eps < 1");
  if (h < 0) h = eps * eps;
  if (!(h > 0 && h <= 1)) throw ContractViolation("phase search needs 0 < h <= 1");
  PhaseParams p;
  p.h = h;
  p.eps = eps;
  // small slack so that exact reciprocals (1/16, 1/4, ...) do not round up
  auto ceil_of = [](double x) { return static_cast<int>(std::ceil(x - 1e-9)); };
  p.limit_h = ceil_of(6.0 / h) + 1;
  p.ell_max = ceil_of(3.0 / eps);
  p.tau_max = ceil_of(72.0 / (h * eps));
  p.beta = beta;
  return p;
}

int PhaseParams::stop_threshold(int n_host) const {
  return std::max(1, static_cast<int>(std::ceil(beta * n_host - 1e-9)));
}

int PhaseParams::phase_cap() const {
  return std::max(1, static_cast<int>(std::ceil(phase_cap_factor / (h * eps * eps) - 1e-9)));
}

}  // namespace dynmwm
