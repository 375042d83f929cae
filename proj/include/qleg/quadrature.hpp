#ifndef QLEG_QUADRATURE_HPP
#define QLEG_QUADRATURE_HPP

// Symmetric-limit integrals over the real line and the orthogonality /
// normalization checks built on them.

#include "qleg/exactpoly.hpp"

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace qleg {

struct QuadratureResult {
    std::complex<double> value;
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

/// Adaptive integration ran out of evaluations (or of representable
/// subdivisions) before meeting its tolerance.
class QuadratureBudgetExceeded : public std::runtime_error {
public:
    explicit QuadratureBudgetExceeded(const QuadratureResult& best);
    const QuadratureResult& best_estimate() const noexcept { return best_; }

private:
    QuadratureResult best_;
};

using Integrand = std::function<std::complex<double>(double)>;

inline constexpr double kDefaultAbsTol = 1e-12;
inline constexpr double kDefaultRelTol = 1e-10;
inline constexpr std::size_t kDefaultEvaluationBudget = 2'000'000;

/// lim_{a->inf} int_{-a}^{a} f(x) dx.
///
/// Substitutes x = tan u and folds the two half-lines onto u in [0, pi/2):
///     int_0^{pi/2} [f(tan u) + f(-tan u)] sec^2 u du,
/// so odd integrands cancel pointwise and the symmetric limit holds by
/// construction. The folded integrand is handled by globally adaptive
/// 15-point Gauss-Kronrod with the embedded 7-point Gauss error estimate.
/// Requires f to decay at least like |x|^-2.
QuadratureResult integrate_real_line(const Integrand& f, double abs_tol = kDefaultAbsTol,
                                     double rel_tol = kDefaultRelTol,
                                     std::size_t max_evaluations = kDefaultEvaluationBudget);

/// int Q^k_l(ix) Q^k_lp(ix) dx, the plain (unconjugated) product. The
/// absolute tolerance is tol times a coarse estimate of int |Q^k_l Q^k_lp|.
QuadratureResult inner_product(int k, int l, int lp, double tol = kDefaultRelTol);

/// Exact rational multiple of pi.
struct PiMultiple {
    Rational coefficient;
    double value() const;
};

/// (2l)! pi prod_{i=l+2}^{k} (l+i)(l-i+1); the empty product at k = l+1 is 1.
PiMultiple normalization_exact(int k, int l);

struct GramReport {
    int k = 0;
    double tol = 0.0;
    std::vector<std::vector<QuadratureResult>> entries;  // [l][lp]
    std::vector<std::vector<Rational>> expected;         // multiples of pi
    double max_abs_deviation = 0.0;
    bool converged = true;

    double expected_value(int l, int lp) const;
    double deviation(int l, int lp) const;
};

/// All inner products for l, lp < k (1 <= k <= 10). Entries are
/// independent and may be computed on several threads; results do not
/// depend on the thread count. Entries that exhaust the budget keep their
/// best estimate and clear `converged`.
GramReport gram_matrix(int k, double tol = kDefaultRelTol, unsigned threads = 1);

/// Bracket (1+x^2)/(l-n) [Q^k_n dQ^k_l/dx - Q^k_l dQ^k_n/dx] at x = +a and -a.
/// Integer degrees use the exact closed forms; degrees in (-1, 0) use the
/// large-|x| expansion and need a >= 10.
struct BoundaryTerm {
    std::complex<double> upper;  // at x = +a
    std::complex<double> lower;  // at x = -a
    std::complex<double> difference() const { return upper - lower; }
};
BoundaryTerm boundary_term(int k, double l, double n, double a);

/// Least-squares slope of log|y| against log x.
double loglog_slope(std::span<const double> xs, std::span<const double> ys);

/// Fitted exponent of |Q^k_l(ix)| over x in {1e2, 10^2.5, ..., 1e4}.
double decay_exponent(int k, int l);

/// Fitted exponent of |bracket at +a| over the given a values.
double boundary_decay_exponent(int k, double l, double n, std::span<const double> a_values);

} // namespace qleg

#endif // QLEG_QUADRATURE_HPP
