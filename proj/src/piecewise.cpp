#include "modcont/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "modcont/cantor.hpp"

namespace modcont {

namespace {

constexpr double kContinuityTol = 1e-12;

double clamp01(double u) { return std::fmin(std::fmax(u, 0.0), 1.0); }

}  // namespace

double Piece::eval(double x) const {
  if (kind == PieceKind::Affine) return slope * x + intercept;
  const double u = in_reflect ? in_shift - x : in_shift + x;
  double p = 0.0;
  switch (kind) {
    case PieceKind::Cantor:
      p = cantor_eval(clamp01(u), cantor_digits);
      break;
    case PieceKind::Power:
      p = (u <= 0.0) ? 0.0 : std::pow(clamp01(u), alpha);
      break;
    case PieceKind::Identity:
      p = u;
      break;
    case PieceKind::Affine:
      break;  // handled above
  }
  return out_offset + (out_reflect ? -p : p);
}

double Piece::derivative(double x) const {
  if (kind == PieceKind::Affine) return slope;
  if (kind == PieceKind::Cantor)
    throw std::logic_error("Piece::derivative: Cantor piece is not differentiable");
  const double u = in_reflect ? in_shift - x : in_shift + x;
  double dp = 0.0;
  switch (kind) {
    case PieceKind::Power:
      dp = (u <= 0.0) ? std::numeric_limits<double>::infinity()
                      : alpha * std::pow(u, alpha - 1.0);
      break;
    case PieceKind::Identity:
      dp = 1.0;
      break;
    default:
      break;
  }
  const double sign = (in_reflect ? -1.0 : 1.0) * (out_reflect ? -1.0 : 1.0);
  return sign * dp;
}

PiecewiseFn::PiecewiseFn(Interval domain, std::vector<Piece> pieces,
                         bool monotone_nondecreasing)
    : domain_(domain), pieces_(std::move(pieces)), monotone_(monotone_nondecreasing) {
  if (pieces_.empty()) throw std::invalid_argument("PiecewiseFn: no pieces");
  if (std::fabs(pieces_.front().sub.lo - domain_.lo) > kContinuityTol ||
      std::fabs(pieces_.back().sub.hi - domain_.hi) > kContinuityTol)
    throw std::invalid_argument("PiecewiseFn: pieces do not span the domain");
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
    const double b = pieces_[i].sub.hi;
    if (std::fabs(b - pieces_[i + 1].sub.lo) > kContinuityTol)
      throw std::invalid_argument("PiecewiseFn: pieces do not tile the domain");
    const double left = pieces_[i].eval(b);
    const double right = pieces_[i + 1].eval(b);
    if (std::fabs(left - right) > kContinuityTol)
      throw std::invalid_argument("PiecewiseFn: discontinuity at piece boundary x=" +
                                  std::to_string(b));
  }
}

double PiecewiseFn::eval(double x) const {
  if (!domain_.contains(x, kDomainSlack))
    throw std::domain_error("PiecewiseFn::eval: argument outside domain");
  x = std::fmin(std::fmax(x, domain_.lo), domain_.hi);
  auto it = std::lower_bound(
      pieces_.begin(), pieces_.end(), x,
      [](const Piece& p, double v) { return p.sub.hi < v; });
  if (it == pieces_.end()) --it;
  return it->eval(x);
}

double PiecewiseFn::derivative(double x) const {
  if (!domain_.contains(x, kDomainSlack))
    throw std::domain_error("PiecewiseFn::derivative: argument outside domain");
  x = std::fmin(std::fmax(x, domain_.lo), domain_.hi);
  auto it = std::lower_bound(
      pieces_.begin(), pieces_.end(), x,
      [](const Piece& p, double v) { return p.sub.hi < v; });
  if (it == pieces_.end()) --it;
  return it->derivative(x);
}

namespace {

Piece f3_piece(double lo, double hi, double level) {
  // level + f3(x - lo) = (level + 1) - f2((lo + 1) - x)
  Piece p;
  p.sub = {lo, hi};
  p.kind = PieceKind::Power;
  p.alpha = holder_alpha();
  p.in_shift = lo + 1.0;
  p.in_reflect = true;
  p.out_offset = level + 1.0;
  p.out_reflect = true;
  return p;
}

Piece f2_piece(double lo, double hi, double level) {
  Piece p;
  p.sub = {lo, hi};
  p.kind = PieceKind::Power;
  p.alpha = holder_alpha();
  p.in_shift = -lo;
  p.out_offset = level;
  return p;
}

Piece cantor_piece(double lo, double hi, double level) {
  Piece p;
  p.sub = {lo, hi};
  p.kind = PieceKind::Cantor;
  p.in_shift = -lo;
  p.out_offset = level;
  return p;
}

Piece identity_piece(double lo, double hi) {
  Piece p;
  p.sub = {lo, hi};
  p.kind = PieceKind::Identity;
  return p;
}

std::vector<Piece> staircase_pieces(bool cantor_step) {
  std::vector<Piece> pieces;
  pieces.push_back(f3_piece(0.0, 1.0, 0.0));
  pieces.push_back(f2_piece(1.0, 2.0, 1.0));
  if (cantor_step)
    pieces.push_back(cantor_piece(2.0, 3.0, 2.0));
  else
    pieces.push_back(identity_piece(2.0, 3.0));
  pieces.push_back(f3_piece(3.0, 4.0, 3.0));
  pieces.push_back(f2_piece(4.0, 5.0, 4.0));
  pieces.push_back(f2_piece(5.0, 6.0, 5.0));
  pieces.push_back(f2_piece(6.0, 7.0, 6.0));
  return pieces;
}

}  // namespace

PiecewiseFn build_f() {
  return PiecewiseFn({0.0, 7.0}, staircase_pieces(/*cantor_step=*/true), true);
}

PiecewiseFn build_g() {
  return PiecewiseFn({0.0, 7.0}, staircase_pieces(/*cantor_step=*/false), true);
}

PiecewiseFn build_h() {
  std::vector<Piece> pieces;
  pieces.push_back(f2_piece(0.0, 1.0, 0.0));
  Piece back;  // cantor(2 - x) on (1,2]
  back.sub = {1.0, 2.0};
  back.kind = PieceKind::Cantor;
  back.in_shift = 2.0;
  back.in_reflect = true;
  pieces.push_back(back);
  return PiecewiseFn({0.0, 2.0}, std::move(pieces), false);
}

PiecewiseFn build_f1() {
  return PiecewiseFn({0.0, 1.0}, {cantor_piece(0.0, 1.0, 0.0)}, true);
}

PiecewiseFn build_f2() {
  return PiecewiseFn({0.0, 1.0}, {f2_piece(0.0, 1.0, 0.0)}, true);
}

PiecewiseFn build_f3() {
  return PiecewiseFn({0.0, 1.0}, {f3_piece(0.0, 1.0, 0.0)}, true);
}

PiecewiseFn build_piecewise_linear(const std::vector<double>& xs,
                                   const std::vector<double>& ys) {
  if (xs.size() < 2 || xs.size() != ys.size())
    throw std::invalid_argument("build_piecewise_linear: need matching xs/ys, at least two");
  std::vector<Piece> pieces;
  bool monotone = true;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (!(xs[i] < xs[i + 1]))
      throw std::invalid_argument("build_piecewise_linear: xs must be strictly increasing");
    Piece p;
    p.sub = {xs[i], xs[i + 1]};
    p.kind = PieceKind::Affine;
    p.slope = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
    p.intercept = ys[i] - p.slope * xs[i];
    if (p.slope < 0.0) monotone = false;
    pieces.push_back(p);
  }
  return PiecewiseFn({xs.front(), xs.back()}, std::move(pieces), monotone);
}

const PiecewiseFn& standard_f() {
  static const PiecewiseFn fn = build_f();
  return fn;
}

const PiecewiseFn& standard_g() {
  static const PiecewiseFn fn = build_g();
  return fn;
}

const PiecewiseFn& standard_h() {
  static const PiecewiseFn fn = build_h();
  return fn;
}

}  // namespace modcont
