#ifndef QLEG_SPECIAL_HPP
#define QLEG_SPECIAL_HPP

#include <complex>

namespace qleg {

bool is_integer(double x) noexcept;
bool is_nonpositive_integer(double x) noexcept;
/// x = n + 1/2 for some integer n.
bool is_half_integer(double x) noexcept;

/// sin(pi x) and cos(pi x), exactly 0 / +-1 at integers and half-integers.
double sin_pi(double x) noexcept;
double cos_pi(double x) noexcept;
/// exp(i pi x) built from sin_pi / cos_pi.
std::complex<double> exp_i_pi(double x) noexcept;

/// Gamma function. Positive integers and (positive or negative)
/// half-integers go through exact factorial arithmetic; other arguments use
/// std::tgamma. Throws PoleError at non-positive integers.
double gamma(double x);

/// 1/Gamma(x), zero at the poles.
double rgamma(double x);

/// Rising factorial x (x+1) ... (x+n-1) by repeated multiplication.
double pochhammer(double x, int n);

} // namespace qleg

#endif // QLEG_SPECIAL_HPP
