#ifndef QLEG_EXACTPOLY_HPP
#define QLEG_EXACTPOLY_HPP

// Exact construction of the polynomial objects behind Q^k_l(ix):
// Legendre polynomials, the second-kind companion sum, derivatives of
// ln((1+z)/(1-z)), and the integer numerator of the closed form
//
//     Q^k_l(ix) = i^sigma * N_kl(x) / (1 + x^2)^(k/2),    k > l >= 0.
//
// Everything here runs on GMP integers and rationals; nothing is rounded.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qleg {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr int kMaxOrder = 64;
inline constexpr int kMaxDegree = 63;

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// Dense polynomial with exact rational coefficients, index = power.
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coefficients);

    static RationalPolynomial constant(const Rational& c);
    static RationalPolynomial monomial(const Rational& c, std::size_t power);

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    Rational coefficient(std::size_t power) const;

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    /// 0 if only even powers occur, 1 if only odd powers, nullopt if mixed
    /// or zero.
    std::optional<int> parity() const;
    bool has_integer_coefficients() const;

    Rational operator()(const Rational& z) const;
    RationalPolynomial derivative(unsigned times = 1) const;
    RationalPolynomial pow(unsigned exponent) const;

    RationalPolynomial& operator+=(const RationalPolynomial& rhs);
    RationalPolynomial& operator-=(const RationalPolynomial& rhs);
    RationalPolynomial& operator*=(const RationalPolynomial& rhs);
    RationalPolynomial& operator*=(const Rational& scalar);
    RationalPolynomial& operator/=(const Rational& scalar);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
    friend RationalPolynomial operator*(const Rational& s, RationalPolynomial a) { return a *= s; }
    friend RationalPolynomial operator/(RationalPolynomial a, const Rational& s) { return a /= s; }
    RationalPolynomial operator-() const;

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b);

    std::string to_string(char variable = 'z') const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Polynomial with Gaussian-rational coefficients, stored as real and
/// imaginary parts. Used for p(ix) after the substitution z = ix.
struct GaussianPolynomial {
    RationalPolynomial re;
    RationalPolynomial im;

    /// Multiply by i^n.
    GaussianPolynomial rotated(int quarter_turns) const;
    GaussianPolynomial derivative() const;
    GaussianPolynomial operator*(const Rational& s) const;

    friend bool operator==(const GaussianPolynomial& a, const GaussianPolynomial& b) = default;
};

/// p(z) evaluated on z = ix, split into real and imaginary coefficient parts.
GaussianPolynomial on_imaginary_axis(const RationalPolynomial& p);

/// Validated (k, l) with k > l >= 0 and the public size guard.
class LegendreIndex {
public:
    LegendreIndex(int k, int l);

    int k() const noexcept { return k_; }
    int l() const noexcept { return l_; }

    friend bool operator==(const LegendreIndex&, const LegendreIndex&) = default;
    friend auto operator<=>(const LegendreIndex&, const LegendreIndex&) = default;

private:
    int k_;
    int l_;
};

/// Exact numerator of Q^k_l(ix) = i^sigma N(x) / (1 + x^2)^(k/2).
struct FerrersNumerator {
    LegendreIndex index;
    int sigma;                // (k - l - 1) mod 2
    RationalPolynomial poly;  // integer coefficients, in the real variable x

    std::vector<Integer> integer_coefficients() const;
};

/// Rodrigues: P_l(z) = 1/(2^l l!) d^l/dz^l (z^2 - 1)^l.
RationalPolynomial legendre_p(int l);

/// Explicit sum 2^-l sum_p (-1)^p (2l-2p)! / (p! (l-p)! (l-2p)!) z^(l-2p).
RationalPolynomial legendre_p_explicit(int l);

/// W_l(z) = sum_{j=1}^{l} P_{j-1}(z) P_{l-j}(z) / j, so that
/// Q_l(z) = P_l(z) ln((1+z)/(1-z)) / 2 - W_l(z).
RationalPolynomial log_companion(int l);

/// T_m with d^m/dz^m ln((1+z)/(1-z)) = T_m(z) / (1 - z^2)^m, built from the
/// binomial form (m-1)! sum_s C(m,s) ((-1)^(m-1+s) + 1) z^s.
RationalPolynomial log_derivative_numerator(int m);

/// d^n/dz^n [p(z) L(z)] with L = ln((1+z)/(1-z)), written as
///     log_part(z) L(z) + rational_part(z) / (1 - z^2)^n.
struct LogProductDerivative {
    int order = 0;
    RationalPolynomial log_part;
    RationalPolynomial rational_part;

    friend bool operator==(const LogProductDerivative&, const LogProductDerivative&) = default;
};

/// Leibniz expansion over the closed-form derivatives of L.
LogProductDerivative differentiate_log_product(const RationalPolynomial& p, int order);

/// Same object by n single differentiations (quotient rule on each step).
LogProductDerivative differentiate_log_product_stepwise(const RationalPolynomial& p, int order);

/// R_j with Q_l^(j)(z) = R_j(z) / (1 - z^2)^j. Requires j > l, where both
/// the logarithmic term and the companion polynomial have been differentiated
/// away.
RationalPolynomial second_kind_derivative_numerator(int l, int j);

FerrersNumerator ferrers_numerator(const LegendreIndex& index);

/// Both sides of the order-lowering identity
///     d/dx[(1+x^2)^k D_k] = (l+k)(l-k+1) (1+x^2)^(k-1) D_(k-1),
/// D_j = d^j/dx^j Q_l(ix), with denominators cleared. Requires l + 1 < k.
struct RecurrenceSides {
    GaussianPolynomial lhs;
    GaussianPolynomial rhs;
};
RecurrenceSides order_recurrence_sides(int k, int l);

/// (-1)^(l+1) 2^l l!
Integer a0_closed(int l);

/// ((-1)^(l+1) (l+1)! / 2^l) sum_{n=0}^{floor(l/2)} (-1)^n (2l-2n)! (2n)! /
///     ((2n+1)! (l-2n)! (l-n)! n!)
Rational a0_sum(int l);

/// The finite sum inside a0_sum (without its prefactor).
Rational s_finite_sum(int l);

} // namespace qleg

#endif // QLEG_EXACTPOLY_HPP
