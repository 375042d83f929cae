#ifndef QLEG_HYPERGEOM_HPP
#define QLEG_HYPERGEOM_HPP

// Floating-point hypergeometric machinery: the regularized Gauss series,
// its |z| > 1 connection formula, the large-|z| expansion of Q^k_l and the
// terminating 3F2 / Saalschutz evaluations behind A_0(l).

#include "qleg/exactpoly.hpp"
#include "qleg/special.hpp"

#include <complex>

namespace qleg {

struct SeriesOutcome {
    std::complex<double> value;
    int terms_used = 0;
    bool converged = false;
    /// Magnitude of the first omitted term (scaled like the value).
    double truncation_estimate = 0.0;
    /// A component below 1e-13 |value| was zeroed.
    bool purity_snapped = false;
};

inline constexpr double kSeriesTolerance = 1e-15;
inline constexpr int kSeriesTermCap = 10000;

/// sum_s (a)_s (b)_s / (Gamma(c+s) s!) z^s. Needs |z| < 1 unless a or b is a
/// non-positive integer (terminating series, any z).
SeriesOutcome reg_2f1_series(double a, double b, double c, std::complex<double> z,
                             double tol = kSeriesTolerance);

/// Same function for |z| > 1 through the connection to two series in 1/z.
/// Rejects integer b - a, where the formula degenerates.
SeriesOutcome reg_2f1_connection(double a, double b, double c, std::complex<double> z,
                                 double tol = kSeriesTolerance);

/// Leading large-|x| term of 2F1(1/2, l+1; 3/2; -x^2) (not regularized):
/// (-1)^l pi / Gamma(1/2 - l) * sqrt(pi) / (2 Gamma(l+1) |x|). Needs |x| >= 10.
double asymptotic_2f1_half(int l, double x);

/// Q^k_l(ix) from the two-sum expansion outside the unit circle, principal
/// branches throughout. For integer l the first sum carries sin((k-l) pi) = 0
/// and is dropped exactly. Truncates at max_terms, at convergence, or before
/// the first term that grows (asymptotic regime).
SeriesOutcome q_asymptotic(int k, double l, double x, int max_terms = 60, double tol = 1e-14);

/// Value and x-derivative from the same truncated expansion, differentiated
/// term by term.
struct AsymptoticValue {
    SeriesOutcome value;
    std::complex<double> derivative;
};
AsymptoticValue q_asymptotic_with_derivative(int k, double l, double x, int max_terms = 60,
                                             double tol = 1e-14);

/// Terminating 3F2(a, b, c; d, e; 1).
double f3f2_unit(double a, double b, double c, double d, double e);

/// (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n), the closed form of the balanced
/// 3F2(a, b, -n; c, a+b-c-n+1; 1).
double saalschutz_3f2(double a, double b, int n, double c);

/// 4^l / (l + 1)
Rational s_closed(int l);

/// C(2l, l) * 3F2(1/2, (1-l)/2, -l/2; 3/2, 1/2-l; 1), summed term by term.
double s_via_f3f2(int l);
/// The same quantity with the 3F2 replaced by its Saalschutz closed form.
double s_via_saalschutz(int l);

/// Parameters of the A_0 family cast into the Saalschutz pattern
/// 3F2(a, b, -n; c, a+b-c-n+1; 1). Which upper parameter terminates depends on
/// the parity of l.
struct SaalschutzParameters {
    double a;
    double b;
    int n;
    double c;
};
SaalschutzParameters a0_family_parameters(int l);

} // namespace qleg

#endif // QLEG_HYPERGEOM_HPP
