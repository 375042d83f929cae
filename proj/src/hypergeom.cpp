#include "qleg/hypergeom.hpp"

#include "qleg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

namespace qleg {

namespace {

using cplx = std::complex<double>;

constexpr double kAbsoluteFloor = 1e-300;
constexpr double kPurityThreshold = 1e-13;

void snap(SeriesOutcome& out)
{
    const double mag = std::abs(out.value);
    if (mag == 0.0)
        return;
    if (out.value.imag() != 0.0 && std::abs(out.value.imag()) < kPurityThreshold * mag) {
        out.value.imag(0.0);
        out.purity_snapped = true;
    }
    if (out.value.real() != 0.0 && std::abs(out.value.real()) < kPurityThreshold * mag) {
        out.value.real(0.0);
        out.purity_snapped = true;
    }
}

// Smallest n >= 0 with p = -n, if any.
std::optional<int> termination_index(double p)
{
    if (is_nonpositive_integer(p))
        return static_cast<int>(-p);
    return std::nullopt;
}

// (ix)^p with the principal branch: |x|^p exp(i pi p sign(x) / 2).
cplx imaginary_power(double x, double p)
{
    const double phase = x > 0 ? 0.5 * p : -0.5 * p;
    return std::pow(std::abs(x), p) * exp_i_pi(phase);
}

} // namespace

SeriesOutcome reg_2f1_series(double a, double b, double c, cplx z, double tol)
{
    std::optional<int> stop = termination_index(a);
    if (auto nb = termination_index(b); nb && (!stop || *nb < *stop))
        stop = nb;
    if (!stop && std::abs(z) >= 1.0)
        throw DomainError("reg_2f1_series: |z| >= 1 with a non-terminating series; use reg_2f1_connection");

    SeriesOutcome out;
    // Terms with c + s at a pole of Gamma vanish.
    const int first = is_nonpositive_integer(c) ? static_cast<int>(1.0 - c) : 0;
    if (stop && first > *stop) {
        out.value = 0.0;
        out.converged = true;
        return out;
    }

    cplx term = rgamma(c + first);
    for (int s = 0; s < first; ++s)
        term *= (a + s) * (b + s) / (s + 1.0) * z;

    cplx sum = 0.0;
    const int last = stop ? *stop : first + kSeriesTermCap - 1;
    for (int s = first; s <= last; ++s) {
        if (!stop && std::abs(term) <= tol * std::abs(sum) + kAbsoluteFloor) {
            out.converged = true;
            out.truncation_estimate = std::abs(term);
            break;
        }
        sum += term;
        ++out.terms_used;
        term *= (a + s) * (b + s) / ((s + 1.0) * (c + s)) * z;
    }
    if (stop) {
        out.converged = true;
        out.truncation_estimate = 0.0;
    } else if (!out.converged) {
        out.truncation_estimate = std::abs(term);
    }
    out.value = sum;
    snap(out);
    return out;
}

SeriesOutcome reg_2f1_connection(double a, double b, double c, cplx z, double tol)
{
    if (std::abs(z) <= 1.0)
        throw DomainError("reg_2f1_connection: requires |z| > 1");
    if (is_integer(b - a))
        throw DomainError("reg_2f1_connection: integer b - a is a degenerate case of the connection formula");

    const cplx w = 1.0 / z;
    SeriesOutcome out;
    out.converged = true;
    cplx acc = 0.0;
    double trunc = 0.0;

    const double g1 = rgamma(b) * rgamma(c - a);
    if (g1 != 0.0) {
        const cplx pre = std::pow(-z, -a) * g1;
        const SeriesOutcome s = reg_2f1_series(a, a - c + 1.0, a - b + 1.0, w, tol);
        acc += pre * s.value;
        trunc += std::abs(pre) * s.truncation_estimate;
        out.terms_used += s.terms_used;
        out.converged = out.converged && s.converged;
    }
    const double g2 = rgamma(a) * rgamma(c - b);
    if (g2 != 0.0) {
        const cplx pre = std::pow(-z, -b) * g2;
        const SeriesOutcome s = reg_2f1_series(b, b - c + 1.0, b - a + 1.0, w, tol);
        acc -= pre * s.value;
        trunc += std::abs(pre) * s.truncation_estimate;
        out.terms_used += s.terms_used;
        out.converged = out.converged && s.converged;
    }
    const double scale = std::numbers::pi / sin_pi(b - a);
    out.value = scale * acc;
    out.truncation_estimate = std::abs(scale) * trunc;
    snap(out);
    return out;
}

double asymptotic_2f1_half(int l, double x)
{
    if (l < 0)
        throw ConstraintError("asymptotic_2f1_half: l must be non-negative");
    if (!(std::abs(x) >= 10.0))
        throw DomainError("asymptotic_2f1_half: requires |x| >= 10");
    const double sign = (l % 2 == 0) ? 1.0 : -1.0;
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    return sign * std::numbers::pi * rgamma(0.5 - l) * sqrt_pi / (2.0 * gamma(l + 1.0) * std::abs(x));
}

AsymptoticValue q_asymptotic_with_derivative(int k, double l, double x, int max_terms, double tol)
{
    if (k < 1)
        throw ConstraintError("q_asymptotic: k must be a positive integer");
    if (!(l > -1.0))
        throw ConstraintError("q_asymptotic: requires l > -1");
    const bool integer_degree = is_integer(l);
    if (integer_degree && !(k > l))
        throw ConstraintError("q_asymptotic: integer l requires k > l");
    if (!(std::abs(x) > 1.0) || !std::isfinite(x))
        throw DomainError("q_asymptotic: requires finite |x| > 1");
    if (max_terms < 1)
        throw ConstraintError("q_asymptotic: max_terms must be positive");
    const double cos_l = cos_pi(l);
    if (cos_l == 0.0)
        throw PoleError("q_asymptotic: cos(l pi) = 0 at half-integer l = " + std::to_string(l));

    const double kd = k;
    const cplx z{0.0, x};
    const double one_plus_x2 = 1.0 + x * x;
    const cplx prefactor = std::pow(2.0, -(l + 2.0)) * exp_i_pi(kd) * std::sqrt(std::numbers::pi) *
                           std::pow(one_plus_x2, 0.5 * kd) / cos_l;

    // First sum: i 2^(2l+1) Gamma(k-l) sin((k-l)pi) z^(l-k) sum_s a_s z^(-2s),
    // a_s = ((k-l)/2)_s ((k-l-1)/2)_s / (Gamma(s-l+1/2) s!).
    // Second sum: (cos((k+l)pi) + e^(i(l-k)pi)) Gamma(k+l+1) z^(-k-l-1) sum_s b_s z^(-2s),
    // b_s = ((k+l+1)/2)_s ((k+l+2)/2)_s / (Gamma(s+l+3/2) s!).
    const bool first_active = !integer_degree && sin_pi(kd - l) != 0.0;
    cplx lead1 = 0.0;
    double p1 = l - kd;
    if (first_active)
        lead1 = cplx{0.0, 1.0} * std::pow(2.0, 2.0 * l + 1.0) * gamma(kd - l) * sin_pi(kd - l) *
                rgamma(0.5 - l) * imaginary_power(x, p1);
    double p2 = -kd - l - 1.0;
    const cplx lead2 = (cos_pi(kd + l) + exp_i_pi(l - kd)) * gamma(kd + l + 1.0) * rgamma(l + 1.5) *
                       imaginary_power(x, p2);

    const double alpha = 0.5 * (kd - l), beta = 0.5 * (kd - l - 1.0);
    const double gam = 0.5 * (kd + l + 1.0), del = 0.5 * (kd + l + 2.0);
    const cplx inv_z2 = -1.0 / (x * x);  // z^-2

    // d/dz [(1-z^2)^(k/2) z^p] = (1-z^2)^(k/2) z^p (p/z - k z/(1-z^2)); d/dx = i d/dz
    auto slope = [&](double p) { return cplx{0.0, 1.0} * (p / z - kd * z / one_plus_x2); };

    cplx t1 = lead1, t2 = lead2;
    cplx sum = 0.0, dsum = 0.0;
    double previous = std::numeric_limits<double>::infinity();
    SeriesOutcome out;
    double omitted = 0.0;
    bool stopped = false;
    for (int s = 0; s < max_terms; ++s) {
        const cplx term = t1 + t2;
        const double mag = std::abs(term);
        if (s > 0 && mag > previous) {  // asymptotic: stop at the smallest term
            omitted = mag;
            stopped = true;
            break;
        }
        if (s > 0 && mag <= tol * std::abs(sum) + kAbsoluteFloor) {
            omitted = mag;
            stopped = true;
            out.converged = true;
            break;
        }
        sum += term;
        dsum += t1 * slope(p1) + t2 * slope(p2);
        ++out.terms_used;
        previous = mag;

        const double sd = s;
        t1 *= (alpha + sd) * (beta + sd) / ((sd + 1.0) * (sd - l + 0.5)) * inv_z2;
        t2 *= (gam + sd) * (del + sd) / ((sd + 1.0) * (sd + l + 1.5)) * inv_z2;
        p1 -= 2.0;
        p2 -= 2.0;
    }
    if (!stopped)
        omitted = std::abs(t1 + t2);

    out.value = prefactor * sum;
    out.truncation_estimate = std::abs(prefactor) * omitted;
    if (!out.converged)
        out.converged = out.truncation_estimate <= tol * std::abs(out.value) + kAbsoluteFloor;
    snap(out);
    return {out, prefactor * dsum};
}

SeriesOutcome q_asymptotic(int k, double l, double x, int max_terms, double tol)
{
    return q_asymptotic_with_derivative(k, l, x, max_terms, tol).value;
}

double f3f2_unit(double a, double b, double c, double d, double e)
{
    std::optional<int> stop;
    for (double p : {a, b, c})
        if (auto n = termination_index(p); n && (!stop || *n < *stop))
            stop = n;
    if (!stop)
        throw DomainError("f3f2_unit: only terminating series are supported");
    double term = 1.0, sum = 0.0;
    for (int n = 0; n <= *stop; ++n) {
        sum += term;
        if (n == *stop)
            break;
        const double den = (d + n) * (e + n) * (n + 1.0);
        if (den == 0.0)
            throw PoleError("f3f2_unit: lower parameter reaches a non-positive integer before termination");
        term *= (a + n) * (b + n) * (c + n) / den;
    }
    return sum;
}

double saalschutz_3f2(double a, double b, int n, double c)
{
    if (n < 0)
        throw ConstraintError("saalschutz_3f2: n must be non-negative");
    const double den = pochhammer(c, n) * pochhammer(c - a - b, n);
    if (den == 0.0)
        throw PoleError("saalschutz_3f2: (c)_n (c-a-b)_n vanishes");
    return pochhammer(c - a, n) * pochhammer(c - b, n) / den;
}

Rational s_closed(int l)
{
    if (l < 0 || l > kMaxDegree)
        throw ConstraintError("s_closed: degree out of range");
    Rational r(Integer(1) << (2 * static_cast<unsigned>(l)), Integer(l + 1));
    r.canonicalize();
    return r;
}

SaalschutzParameters a0_family_parameters(int l)
{
    if (l < 0 || l > kMaxDegree)
        throw ConstraintError("a0_family_parameters: degree out of range");
    if (l % 2 == 0)
        return {0.5, 0.5 * (1.0 - l), l / 2, 1.5};
    return {0.5, -0.5 * l, (l - 1) / 2, 1.5};
}

double s_via_f3f2(int l)
{
    if (l < 0 || l > kMaxDegree)
        throw ConstraintError("s_via_f3f2: degree out of range");
    const double central = binomial(2 * static_cast<unsigned>(l), static_cast<unsigned>(l)).get_d();
    return central * f3f2_unit(0.5, 0.5 * (1.0 - l), -0.5 * l, 1.5, 0.5 - l);
}

double s_via_saalschutz(int l)
{
    const SaalschutzParameters p = a0_family_parameters(l);
    const double central = binomial(2 * static_cast<unsigned>(l), static_cast<unsigned>(l)).get_d();
    return central * saalschutz_3f2(p.a, p.b, p.n, p.c);
}

} // namespace qleg
