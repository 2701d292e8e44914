#pragma once

namespace modcont {

/// log(2)/log(3), the Hoelder exponent of the Cantor function. Computed once.
double holder_alpha();

/// x^alpha on [0,1] with alpha = log(2)/log(3). Concave, increasing,
/// f2(0) = 0, f2(1) = 1. Inputs are clamped at the endpoints so rounding
/// noise (e.g. a base of -1e-17) cannot produce NaN.
double f2_eval(double x);

/// 1 - f2(1 - x) on [0,1], the convex reflection of f2.
double f3_eval(double x);

// Cantor function on [0,1] by ternary digit expansion.
//
// The digits t_1, t_2, ... of x are scanned in order; if the first digit
// equal to 1 appears at position k the value is sum_{i<k} (t_i/2) 2^-i + 2^-k,
// otherwise it is sum_i (t_i/2) 2^-i. Digits are extracted with 128-bit
// fixed-point arithmetic, so they are the true ternary digits of the binary
// argument and the returned value is within 2^-digits of the exact one.
//
// Inputs within 1e-12 of a ternary rational k/3^20 are interpreted as that
// rational (its terminating expansion), so values at ternary rationals such
// as Cantor-construction endpoints are exact even though those rationals are
// not representable in binary. `digits` beyond 64 is capped at 64; the tail
// of the expansion is then worth less than one ulp of the result.
double cantor_eval(double x, int digits = 64);

}  // namespace modcont
