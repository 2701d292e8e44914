#pragma once

#include <vector>

#include "modcont/interval.hpp"

namespace modcont {

enum class PieceKind { Cantor, Power, Identity, Affine };

// One primitive on a subinterval of the parent domain. The primitive P is
// evaluated through an input/output transform:
//
//   value(x) = out_offset + s_out * P(u),  u = in_reflect ? in_shift - x
//                                                         : in_shift + x
//
// with s_out = -1 when out_reflect is set. This is enough to express every
// piece of the staircase gallery, e.g. 2 + cantor(x - 2) or 4 - f2(4 - x).
// Affine pieces carry their own slope/intercept and ignore the transform.
struct Piece {
  Interval sub;
  PieceKind kind = PieceKind::Identity;

  double alpha = 1.0;  // Power exponent, in (0,1]
  double slope = 1.0;  // Affine
  double intercept = 0.0;

  double in_shift = 0.0;
  bool in_reflect = false;
  double out_offset = 0.0;
  bool out_reflect = false;

  int cantor_digits = 64;

  double eval(double x) const;
  // Analytic one-sided derivative; throws for Cantor pieces.
  double derivative(double x) const;
};

// Continuous function on a compact interval assembled from pieces whose
// subdomains tile the domain. Evaluation at a shared endpoint uses the left
// piece (the pieces are read as [lo0, hi0], (lo1, hi1], ...); by the
// continuity requirement the choice is observationally irrelevant.
class PiecewiseFn {
 public:
  PiecewiseFn(Interval domain, std::vector<Piece> pieces,
              bool monotone_nondecreasing);

  double eval(double x) const;
  double derivative(double x) const;

  const Interval& domain() const { return domain_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  bool monotone_nondecreasing() const { return monotone_; }

 private:
  Interval domain_;
  std::vector<Piece> pieces_;
  bool monotone_ = false;
};

// The staircase gallery on [0,7]: f3, 1+f2(.-1), then a Cantor step on (2,3]
// for f (an identity step for g), 3+f3(.-3) and three more f2 steps.
PiecewiseFn build_f();
PiecewiseFn build_g();
// Non-monotone example on [0,2]: f2 on [0,1], cantor(2-x) on (1,2].
PiecewiseFn build_h();

// Single-primitive functions on [0,1].
PiecewiseFn build_f1();
PiecewiseFn build_f2();
PiecewiseFn build_f3();

// Piecewise-linear interpolant through (xs[i], ys[i]); xs strictly increasing.
PiecewiseFn build_piecewise_linear(const std::vector<double>& xs,
                                   const std::vector<double>& ys);

// Cached instances of the gallery functions.
const PiecewiseFn& standard_f();
const PiecewiseFn& standard_g();
const PiecewiseFn& standard_h();

}  // namespace modcont
