#ifndef QLEG_EVAL_HPP
#define QLEG_EVAL_HPP

// Double-precision evaluation of Q^k_l(ix) and friends from the exact
// numerators. The root (1+x^2)^(k/2) is always the positive real one; the
// phase of the result is carried entirely by i^sigma.

#include "qleg/exactpoly.hpp"

#include <complex>
#include <memory>
#include <vector>

namespace qleg {

using ComplexValue = std::complex<double>;

/// P(x) / (1+x^2)^(half_power/2) for a single-parity integer polynomial P.
/// Evaluated by Horner in x^2 for |x| <= 1 and in 1/x^2 with the leading
/// power factored out otherwise.
class ParityRational {
public:
    ParityRational() = default;
    ParityRational(const RationalPolynomial& numerator, int half_power);

    double operator()(double x) const;

    int degree() const noexcept { return degree_; }
    int half_power() const noexcept { return half_power_; }

private:
    std::vector<double> by_square_;  // coefficient of x^(parity + 2j), j ascending
    int degree_ = -1;
    int parity_ = 0;
    int half_power_ = 0;
};

/// Q^k_l(ix) and its first two x-derivatives, all from exact numerators:
/// N, (1+x^2)N' - kxN, and one more application of the same quotient rule.
class FerrersFunction {
public:
    explicit FerrersFunction(const LegendreIndex& index);

    const LegendreIndex& index() const noexcept { return numerator_.index; }
    const FerrersNumerator& numerator() const noexcept { return numerator_; }
    int sigma() const noexcept { return numerator_.sigma; }

    ComplexValue value(double x) const { return phase(f0_(x)); }
    ComplexValue derivative(double x) const { return phase(f1_(x)); }
    ComplexValue second_derivative(double x) const { return phase(f2_(x)); }

    /// Real coefficient multiplying i^sigma.
    double real_value(double x) const { return f0_(x); }
    double real_derivative(double x) const { return f1_(x); }
    double real_second_derivative(double x) const { return f2_(x); }

private:
    ComplexValue phase(double v) const { return numerator_.sigma == 0 ? ComplexValue{v, 0.0} : ComplexValue{0.0, v}; }

    FerrersNumerator numerator_;
    ParityRational f0_, f1_, f2_;
};

/// Shared, immutable instance from a process-wide memo (thread-safe).
std::shared_ptr<const FerrersFunction> ferrers_function(const LegendreIndex& index);

ComplexValue q_ferrers(const LegendreIndex& index, double x);
ComplexValue q_ferrers_derivative(const LegendreIndex& index, double x);

/// Hobson convention: e^(-i pi k/2) Q for x > 0, e^(+i pi k/2) Q for x < 0.
/// Throws DomainError at x = 0.
ComplexValue q_hobson(const LegendreIndex& index, double x);

/// Q_l(ix) = i P_l(ix) arctan(x) - W_l(ix).
ComplexValue q_scalar(int l, double x);

struct OdeResidual {
    double absolute = 0.0;
    double largest_term = 0.0;
    double relative() const { return largest_term == 0.0 ? absolute : absolute / largest_term; }
};

/// |d/dx[(1+x^2) Y'] - [l(l+1) - k^2/(1+x^2)] Y| for Y = Q^k_l(ix).
OdeResidual ode_residual(const LegendreIndex& index, double x);

} // namespace qleg

#endif // QLEG_EVAL_HPP
