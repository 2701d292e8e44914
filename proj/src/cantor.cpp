#include "modcont/cantor.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "modcont/interval.hpp"

namespace modcont {

namespace {

constexpr int kDigitCap = 64;
constexpr double kPow3_20 = 3486784401.0;       // 3^20
constexpr std::uint64_t kPow3_19 = 1162261467;  // 3^19
constexpr double kSnapRadius = 1e-12;

// Ternary digits of a double in [0,1), exact: y holds x * 2^120.
struct FixedPointDigits {
  unsigned __int128 y;

  int next() {
    y *= 3;
    const int d = static_cast<int>(y >> 120);
    y -= static_cast<unsigned __int128>(d) << 120;
    return d;
  }
};

unsigned __int128 to_fixed120(double x) {
  if (x <= 0.0) return 0;
  int e = 0;
  const double fr = std::frexp(x, &e);  // x = fr * 2^e, fr in [0.5, 1)
  const auto m = static_cast<std::uint64_t>(std::ldexp(fr, 53));
  const int shift = 120 - 53 + e;
  if (shift >= 0) return static_cast<unsigned __int128>(m) << shift;
  if (shift <= -64) return 0;
  return static_cast<unsigned __int128>(m >> -shift);
}

// Terminating expansion of num/3^20, most significant digit first.
struct RationalDigits {
  std::uint64_t num;
  std::uint64_t pow = kPow3_19;

  int next() {
    if (pow == 0) return 0;
    const int d = static_cast<int>(num / pow);
    num %= pow;
    pow /= 3;
    return d;
  }
};

// The digit formula, accumulated as a numerator over 2^64 so the only
// floating rounding is the final conversion.
template <typename Digits>
double scan_digits(int digits, Digits gen) {
  std::uint64_t acc = 0;
  for (int k = 1; k <= digits; ++k) {
    const int t = gen.next();
    const std::uint64_t weight = std::uint64_t{1} << (64 - k);
    if (t == 1) {
      acc += weight;
      break;
    }
    if (t == 2) acc += weight;
  }
  return std::ldexp(static_cast<double>(acc), -64);
}

}  // namespace

double holder_alpha() {
  static const double alpha = std::log(2.0) / std::log(3.0);
  return alpha;
}

double f2_eval(double x) {
  if (x < -kDomainSlack || x > 1.0 + kDomainSlack)
    throw std::domain_error("f2_eval: argument outside [0,1]");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return std::pow(x, holder_alpha());
}

double f3_eval(double x) {
  if (x < -kDomainSlack || x > 1.0 + kDomainSlack)
    throw std::domain_error("f3_eval: argument outside [0,1]");
  return 1.0 - f2_eval(1.0 - std::fmin(std::fmax(x, 0.0), 1.0));
}

double cantor_eval(double x, int digits) {
  if (digits < 1) throw std::invalid_argument("cantor_eval: digits must be >= 1");
  if (x < -kDomainSlack || x > 1.0 + kDomainSlack)
    throw std::domain_error("cantor_eval: argument outside [0,1]");
  if (digits > kDigitCap) digits = kDigitCap;
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;

  const double scaled = x * kPow3_20;
  const double nearest = std::nearbyint(scaled);
  if (std::fabs(scaled - nearest) <= kSnapRadius * kPow3_20) {
    const auto num = static_cast<std::uint64_t>(nearest);
    if (num == 0) return 0.0;
    if (num >= 3 * kPow3_19) return 1.0;
    return scan_digits(digits, RationalDigits{num});
  }
  return scan_digits(digits, FixedPointDigits{to_fixed120(x)});
}

}  // namespace modcont
