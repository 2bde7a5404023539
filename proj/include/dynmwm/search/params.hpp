#pragma once

#include "dynmwm/graph/epsilon.hpp"

namespace dynmwm {

enum class BucketMode { kIncremental, kFullRebuild };

struct PhaseParams {
  double h = 1.0 / 16;
  double eps = 0.25;
  int limit_h = 97;    // ceil(6/h) + 1
  int ell_max = 12;    // ceil(3/eps)
  int tau_max = 4608;  // ceil(72/(h*eps))
  double beta = 0.0;   // stop once a query returns fewer than max(1, ceil(beta*n_host)) edges
  double phase_cap_factor = 4.0;
  BucketMode buckets = BucketMode::kIncremental;
  bool materialize_residue = true;
  bool stop_when_quiescent = true;
  bool record_events = false;

  // h defaults to eps^2.
  static PhaseParams make(double eps, double h = -1.0, double beta = 0.0);
  static PhaseParams make(Epsilon eps) { return make(eps.value()); }

  int stop_threshold(int n_host) const;
  int phase_cap() const;  // ceil(c / (h eps^2))
  double removal_budget(int n) const { return h * eps * eps * n; }
};

}  // namespace dynmwm
