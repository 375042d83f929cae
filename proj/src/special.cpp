#include "qleg/special.hpp"

#include "qleg/errors.hpp"
#include "qleg/exactpoly.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qleg {

namespace {

// Beyond this the exact path would only produce inf or 0 anyway.
constexpr double kExactGammaLimit = 171.0;

} // namespace

bool is_integer(double x) noexcept { return std::isfinite(x) && std::nearbyint(x) == x; }

bool is_nonpositive_integer(double x) noexcept { return is_integer(x) && x <= 0.0; }

bool is_half_integer(double x) noexcept { return std::isfinite(x) && is_integer(x - 0.5) && !is_integer(x); }

double sin_pi(double x) noexcept
{
    if (is_integer(x))
        return 0.0;
    if (is_half_integer(x)) {
        const double n = x - 0.5;  // sin(pi (n + 1/2)) = (-1)^n
        return std::fmod(std::abs(n), 2.0) == 0.0 ? 1.0 : -1.0;
    }
    // reduce to [-1, 1) to keep the argument of std::sin small
    double r = std::fmod(x, 2.0);
    if (r >= 1.0)
        r -= 2.0;
    else if (r < -1.0)
        r += 2.0;
    return std::sin(std::numbers::pi * r);
}

double cos_pi(double x) noexcept
{
    if (is_half_integer(x))
        return 0.0;
    if (is_integer(x))
        return std::fmod(std::abs(x), 2.0) == 0.0 ? 1.0 : -1.0;
    double r = std::fmod(x, 2.0);
    if (r >= 1.0)
        r -= 2.0;
    else if (r < -1.0)
        r += 2.0;
    return std::cos(std::numbers::pi * r);
}

std::complex<double> exp_i_pi(double x) noexcept { return {cos_pi(x), sin_pi(x)}; }

double gamma(double x)
{
    if (is_nonpositive_integer(x))
        throw PoleError("gamma: pole at " + std::to_string(x));
    if (std::abs(x) < kExactGammaLimit) {
        if (is_integer(x))
            return factorial(static_cast<unsigned>(x) - 1).get_d();
        if (is_half_integer(x)) {
            const double sqrt_pi = std::sqrt(std::numbers::pi);
            if (x > 0) {
                // Gamma(n + 1/2) = (2n)! / (4^n n!) sqrt(pi)
                const auto n = static_cast<unsigned>(x - 0.5);
                Rational r(factorial(2 * n), (Integer(1) << (2 * n)) * factorial(n));
                r.canonicalize();
                return r.get_d() * sqrt_pi;
            }
            // Gamma(1/2 - n) = (-1)^n 4^n n! / (2n)! sqrt(pi)
            const auto n = static_cast<unsigned>(0.5 - x);
            Rational r((Integer(1) << (2 * n)) * factorial(n), factorial(2 * n));
            r.canonicalize();
            return (n % 2 == 0 ? 1.0 : -1.0) * r.get_d() * sqrt_pi;
        }
    }
    return std::tgamma(x);
}

double rgamma(double x)
{
    if (is_nonpositive_integer(x))
        return 0.0;
    return 1.0 / gamma(x);
}

double pochhammer(double x, int n)
{
    double r = 1.0;
    for (int j = 0; j < n; ++j)
        r *= x + j;
    return r;
}

} // namespace qleg
