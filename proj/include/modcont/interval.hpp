#pragma once

#include <stdexcept>

namespace modcont {

// Slack used everywhere when checking that a point lies in a closed domain.
inline constexpr double kDomainSlack = 1e-15;

/// Closed bounded interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(lo <= hi)) throw std::invalid_argument("Interval: lo > hi");
  }

  double length() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }

  bool contains(double x, double slack = 0.0) const {
    return x >= lo - slack && x <= hi + slack;
  }
};

}  // namespace modcont
