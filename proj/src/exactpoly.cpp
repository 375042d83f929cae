#include "qleg/exactpoly.hpp"

#include "qleg/errors.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace qleg {

namespace {

void require_degree(int l, const char* what)
{
    if (l < 0 || l > kMaxDegree)
        throw ConstraintError(std::string(what) + ": degree must lie in [0, " + std::to_string(kMaxDegree) +
                              "], got " + std::to_string(l));
}

void require_order(int m, int lowest, const char* what)
{
    if (m < lowest || m > kMaxOrder)
        throw ConstraintError(std::string(what) + ": order must lie in [" + std::to_string(lowest) + ", " +
                              std::to_string(kMaxOrder) + "], got " + std::to_string(m));
}

// 1 - z^2
const RationalPolynomial& one_minus_z2()
{
    static const RationalPolynomial p{{Rational(1), Rational(0), Rational(-1)}};
    return p;
}

Rational sign_power(unsigned n) { return (n % 2 == 0) ? Rational(1) : Rational(-1); }

} // namespace

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// ---------------------------------------------------------------------------
// RationalPolynomial

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    for (auto& c : coeffs_)
        c.canonicalize();
    trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t power)
{
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(std::size_t power) const
{
    return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

std::optional<int> RationalPolynomial::parity() const
{
    if (is_zero())
        return std::nullopt;
    const int p = degree() % 2;
    for (std::size_t s = 0; s < coeffs_.size(); ++s)
        if (static_cast<int>(s % 2) != p && coeffs_[s] != 0)
            return std::nullopt;
    return p;
}

bool RationalPolynomial::has_integer_coefficients() const
{
    for (const auto& c : coeffs_)
        if (c.get_den() != 1)
            return false;
    return true;
}

Rational RationalPolynomial::operator()(const Rational& z) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

RationalPolynomial RationalPolynomial::derivative(unsigned times) const
{
    if (times == 0)
        return *this;
    if (static_cast<std::size_t>(times) >= coeffs_.size())
        return {};
    std::vector<Rational> out(coeffs_.size() - times);
    for (std::size_t s = times; s < coeffs_.size(); ++s) {
        Integer falling = 1;
        for (unsigned j = 0; j < times; ++j)
            falling *= static_cast<unsigned long>(s - j);
        out[s - times] = coeffs_[s] * Rational(falling);
    }
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::pow(unsigned exponent) const
{
    RationalPolynomial result = constant(1);
    RationalPolynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1u;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t s = 0; s < rhs.coeffs_.size(); ++s)
        coeffs_[s] += rhs.coeffs_[s];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t s = 0; s < rhs.coeffs_.size(); ++s)
        coeffs_[s] -= rhs.coeffs_[s];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& rhs)
{
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& scalar)
{
    for (auto& c : coeffs_)
        c *= scalar;
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator/=(const Rational& scalar)
{
    if (scalar == 0)
        throw PoleError("RationalPolynomial: division by zero");
    for (auto& c : coeffs_)
        c /= scalar;
    return *this;
}

RationalPolynomial RationalPolynomial::operator-() const
{
    RationalPolynomial r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.coeffs_ == b.coeffs_; }

std::string RationalPolynomial::to_string(char variable) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int s = degree(); s >= 0; --s) {
        Rational c = coeffs_[static_cast<std::size_t>(s)];
        if (c == 0)
            continue;
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        c = abs(c);
        if (c != 1 || s == 0)
            os << c.get_str() << (s > 0 ? " " : "");
        if (s >= 1)
            os << variable;
        if (s >= 2)
            os << '^' << s;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// GaussianPolynomial

GaussianPolynomial GaussianPolynomial::rotated(int quarter_turns) const
{
    switch (((quarter_turns % 4) + 4) % 4) {
    case 1: return {-im, re};
    case 2: return {-re, -im};
    case 3: return {im, -re};
    default: return *this;
    }
}

GaussianPolynomial GaussianPolynomial::derivative() const { return {re.derivative(), im.derivative()}; }

GaussianPolynomial GaussianPolynomial::operator*(const Rational& s) const { return {re * s, im * s}; }

GaussianPolynomial on_imaginary_axis(const RationalPolynomial& p)
{
    const auto& c = p.coefficients();
    std::vector<Rational> re(c.size()), im(c.size());
    for (std::size_t s = 0; s < c.size(); ++s) {
        switch (s % 4) {
        case 0: re[s] = c[s]; break;
        case 1: im[s] = c[s]; break;
        case 2: re[s] = -c[s]; break;
        default: im[s] = -c[s]; break;
        }
    }
    return {RationalPolynomial(std::move(re)), RationalPolynomial(std::move(im))};
}

// ---------------------------------------------------------------------------
// Index and numerators

LegendreIndex::LegendreIndex(int k, int l) : k_(k), l_(l)
{
    if (l < 0 || k < 1 || k <= l)
        throw ConstraintError("LegendreIndex: require k > l >= 0 and k >= 1, got k=" + std::to_string(k) +
                              ", l=" + std::to_string(l));
    if (k > kMaxOrder || l > kMaxDegree)
        throw ConstraintError("LegendreIndex: k <= " + std::to_string(kMaxOrder) + " and l <= " +
                              std::to_string(kMaxDegree) + " required, got k=" + std::to_string(k) +
                              ", l=" + std::to_string(l));
}

std::vector<Integer> FerrersNumerator::integer_coefficients() const
{
    std::vector<Integer> out;
    out.reserve(poly.coefficients().size());
    for (const auto& c : poly.coefficients()) {
        if (c.get_den() != 1)
            throw std::logic_error("FerrersNumerator: non-integer coefficient " + c.get_str());
        out.push_back(c.get_num());
    }
    return out;
}

RationalPolynomial legendre_p(int l)
{
    require_degree(l, "legendre_p");
    const auto lu = static_cast<unsigned>(l);
    RationalPolynomial base({Rational(-1), Rational(0), Rational(1)});
    Rational scale(Integer(1), factorial(lu) * (Integer(1) << lu));
    return base.pow(lu).derivative(lu) * scale;
}

RationalPolynomial legendre_p_explicit(int l)
{
    require_degree(l, "legendre_p_explicit");
    const auto lu = static_cast<unsigned>(l);
    std::vector<Rational> c(lu + 1);
    for (unsigned p = 0; 2 * p <= lu; ++p) {
        Rational term(factorial(2 * lu - 2 * p), factorial(p) * factorial(lu - p) * factorial(lu - 2 * p));
        term.canonicalize();
        c[lu - 2 * p] = sign_power(p) * term / Rational(Integer(1) << lu);
    }
    return RationalPolynomial(std::move(c));
}

RationalPolynomial log_companion(int l)
{
    require_degree(l, "log_companion");
    RationalPolynomial w;
    for (int j = 1; j <= l; ++j)
        w += legendre_p(j - 1) * legendre_p(l - j) / Rational(j);
    return w;
}

RationalPolynomial log_derivative_numerator(int m)
{
    require_order(m, 1, "log_derivative_numerator");
    const auto mu = static_cast<unsigned>(m);
    const Integer lead = factorial(mu - 1);
    std::vector<Rational> c(mu + 1);
    for (unsigned s = 0; s <= mu; ++s) {
        // (-1)^(m-1+s) + 1 is 2 or 0
        if ((mu - 1 + s) % 2 == 0)
            c[s] = Rational(2 * lead * binomial(mu, s));
    }
    return RationalPolynomial(std::move(c));
}

LogProductDerivative differentiate_log_product(const RationalPolynomial& p, int order)
{
    require_order(order, 0, "differentiate_log_product");
    const auto n = static_cast<unsigned>(order);
    LogProductDerivative d;
    d.order = order;
    d.log_part = p.derivative(n);
    // m = 0 contributes only to the log part
    for (unsigned m = 1; m <= n; ++m) {
        RationalPolynomial pd = p.derivative(n - m);
        if (pd.is_zero())
            continue;
        d.rational_part += pd * log_derivative_numerator(static_cast<int>(m)) * one_minus_z2().pow(n - m) *
                           Rational(binomial(n, m));
    }
    return d;
}

LogProductDerivative differentiate_log_product_stepwise(const RationalPolynomial& p, int order)
{
    require_order(order, 0, "differentiate_log_product_stepwise");
    LogProductDerivative d;
    d.log_part = p;
    const RationalPolynomial two_z({Rational(0), Rational(2)});
    for (int j = 0; j < order; ++j) {
        // d/dz [A L + B (1-z^2)^-j] = A' L + [2A (1-z^2)^j + B'(1-z^2) + 2jzB] (1-z^2)^-(j+1)
        RationalPolynomial next = d.log_part * one_minus_z2().pow(static_cast<unsigned>(j)) * Rational(2) +
                                  d.rational_part.derivative() * one_minus_z2() +
                                  two_z * d.rational_part * Rational(j);
        d.log_part = d.log_part.derivative();
        d.rational_part = std::move(next);
        d.order = j + 1;
    }
    return d;
}

RationalPolynomial second_kind_derivative_numerator(int l, int j)
{
    require_degree(l, "second_kind_derivative_numerator");
    require_order(j, 1, "second_kind_derivative_numerator");
    if (j <= l)
        throw ConstraintError("second_kind_derivative_numerator: need j > l, got j=" + std::to_string(j) +
                              ", l=" + std::to_string(l));
    // W_l has degree l - 1 < j, so only (1/2) P_l L survives.
    LogProductDerivative d = differentiate_log_product(legendre_p(l), j);
    if (!d.log_part.is_zero())
        throw std::logic_error("second_kind_derivative_numerator: logarithmic part did not vanish");
    return d.rational_part / Rational(2);
}

FerrersNumerator ferrers_numerator(const LegendreIndex& index)
{
    const int k = index.k();
    const int l = index.l();
    // Q^k_l(z) = (-1)^k (1-z^2)^(k/2) Q_l^(k)(z) = (-1)^k R_k(z) / (1-z^2)^(k/2)
    const RationalPolynomial r = second_kind_derivative_numerator(l, k);
    const GaussianPolynomial on_axis = on_imaginary_axis(r);
    const int sigma = (k - l - 1) % 2;

    const RationalPolynomial& kept = sigma == 0 ? on_axis.re : on_axis.im;
    const RationalPolynomial& dropped = sigma == 0 ? on_axis.im : on_axis.re;
    if (!dropped.is_zero())
        throw std::logic_error("ferrers_numerator: numerator is not of a single phase");

    FerrersNumerator out{index, sigma, kept * sign_power(static_cast<unsigned>(k))};
    return out;
}

RecurrenceSides order_recurrence_sides(int k, int l)
{
    if (!(l + 1 < k))
        throw ConstraintError("order_recurrence_sides: need l + 1 < k");
    // (1+x^2)^j D_j(x) = i^j R_j(ix)
    const GaussianPolynomial upper = on_imaginary_axis(second_kind_derivative_numerator(l, k)).rotated(k);
    const GaussianPolynomial lower = on_imaginary_axis(second_kind_derivative_numerator(l, k - 1)).rotated(k - 1);
    const Rational factor = Rational((l + k) * (l - k + 1));
    return {upper.derivative(), lower * factor};
}

Integer a0_closed(int l)
{
    require_degree(l, "a0_closed");
    const auto lu = static_cast<unsigned>(l);
    Integer v = factorial(lu) << lu;
    return (lu % 2 == 0) ? Integer(-v) : v;
}

Rational s_finite_sum(int l)
{
    require_degree(l, "s_finite_sum");
    const auto lu = static_cast<unsigned>(l);
    Rational s = 0;
    for (unsigned n = 0; 2 * n <= lu; ++n) {
        Rational term(factorial(2 * lu - 2 * n) * factorial(2 * n),
                      factorial(2 * n + 1) * factorial(lu - 2 * n) * factorial(lu - n) * factorial(n));
        term.canonicalize();
        s += sign_power(n) * term;
    }
    return s;
}

Rational a0_sum(int l)
{
    require_degree(l, "a0_sum");
    const auto lu = static_cast<unsigned>(l);
    Rational prefactor(factorial(lu + 1), Integer(1) << lu);
    prefactor.canonicalize();
    return sign_power(lu + 1) * prefactor * s_finite_sum(l);
}

} // namespace qleg
