#pragma once

#include <vector>

#include "fconv/core_numerics.hpp"

namespace fconv {

// Inclusive range of input codes handled by one (a, b) pair.
struct Segment {
  int lo = 0;
  int hi = 0;
  Mode mode = Mode::Log;

  int point_count() const { return hi - lo + 1; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

// Best real-coefficient linear fit of the rounded reference values over a
// segment's grid points, in the minimax (Chebyshev) sense.  Slopes and the
// deviation are exact rationals; the doubles are derived views.
struct RealFit {
  double a_star = 0.0;    // slope, dimensionless (unit interval to unit interval)
  double b_star = 0.0;    // intercept in unit-interval coordinates
  double mqd_lsb = 0.0;   // max |a*x + b - y| over the grid, in output LSBs
  bool degenerate = false;

  // Exact forms.  a = a_num/a_den; mqd_lsb = dev_num/dev_den.
  long long a_num = 0;
  long long a_den = 1;
  long long dev_num = 0;
  long long dev_den = 1;

  // Grid points attaining +/-mqd with alternating signs (x-sorted), and
  // whether they certify optimality (>= 3 alternations, or mqd == 0).
  std::vector<int> support;
  bool equioscillation = false;
};

// Exact minimax fit over {(i, y_i) : lo <= i <= hi} where y_i is the
// rounded reference.  The optimum slope of the discrete problem is an edge
// slope of one of the two convex hulls, so the search is exact in integer
// arithmetic.  Ties between optimal slopes (not observed in practice)
// resolve to the one closest to the analytic derivative at the segment
// midpoint.  A single-point segment yields the degenerate fit a=0, b=y.
RealFit fit_segment(const Segment& seg);

// RN[MQD / LSB]: the reachable hardware-error bound for a fit.
int mhe_bound(const RealFit& fit);

// Exact comparison helpers for fits (used by the segmentation loops).
bool mqd_less(const RealFit& a, const RealFit& b);

}  // namespace fconv
