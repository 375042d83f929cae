#include "qleg/eval.hpp"

#include "qleg/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qleg {

namespace {

RationalPolynomial quotient_rule_numerator(const RationalPolynomial& n, int half_power)
{
    // d/dx [N (1+x^2)^(-h/2)] = [(1+x^2) N' - h x N] (1+x^2)^(-(h+2)/2)
    const RationalPolynomial one_plus_x2({Rational(1), Rational(0), Rational(1)});
    const RationalPolynomial x({Rational(0), Rational(1)});
    return one_plus_x2 * n.derivative() - x * n * Rational(half_power);
}

double horner(const std::vector<double>& c, double t)
{
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

double horner_reversed(const std::vector<double>& c, double t)
{
    double acc = 0.0;
    for (double v : c)
        acc = acc * t + v;
    return acc;
}

} // namespace

ParityRational::ParityRational(const RationalPolynomial& numerator, int half_power)
    : degree_(numerator.degree()), half_power_(half_power)
{
    if (numerator.is_zero())
        return;
    const auto parity = numerator.parity();
    if (!parity)
        throw std::logic_error("ParityRational: numerator mixes even and odd powers");
    parity_ = *parity;
    for (int s = parity_; s <= degree_; s += 2)
        by_square_.push_back(numerator.coefficient(static_cast<std::size_t>(s)).get_d());
}

double ParityRational::operator()(double x) const
{
    if (degree_ < 0)
        return 0.0;
    const double ax = std::abs(x);
    const double h = 0.5 * half_power_;
    if (ax <= 1.0) {
        const double t = x * x;
        const double odd = parity_ == 1 ? x : 1.0;
        return odd * horner(by_square_, t) / std::pow(1.0 + t, h);
    }
    // P(x) = x^D sum_j c_(D-2j) x^(-2j),  (1+x^2)^h = |x|^(2h) (1 + x^-2)^h
    const double t = 1.0 / (x * x);
    const double sign = (parity_ == 1 && x < 0) ? -1.0 : 1.0;
    return sign * std::pow(ax, degree_ - half_power_) * horner_reversed(by_square_, t) / std::pow(1.0 + t, h);
}

FerrersFunction::FerrersFunction(const LegendreIndex& index) : numerator_(ferrers_numerator(index))
{
    const int k = index.k();
    const RationalPolynomial n1 = quotient_rule_numerator(numerator_.poly, k);
    const RationalPolynomial n2 = quotient_rule_numerator(n1, k + 2);
    f0_ = ParityRational(numerator_.poly, k);
    f1_ = ParityRational(n1, k + 2);
    f2_ = ParityRational(n2, k + 4);
}

std::shared_ptr<const FerrersFunction> ferrers_function(const LegendreIndex& index)
{
    static std::mutex mutex;
    static std::map<LegendreIndex, std::shared_ptr<const FerrersFunction>> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(index); it != memo.end())
            return it->second;
    }
    auto built = std::make_shared<const FerrersFunction>(index);
    std::lock_guard lock(mutex);
    return memo.try_emplace(index, std::move(built)).first->second;
}

ComplexValue q_ferrers(const LegendreIndex& index, double x) { return ferrers_function(index)->value(x); }

ComplexValue q_ferrers_derivative(const LegendreIndex& index, double x)
{
    return ferrers_function(index)->derivative(x);
}

ComplexValue q_hobson(const LegendreIndex& index, double x)
{
    if (x == 0.0)
        throw DomainError("q_hobson: phase is undefined at x = 0 (sign of Im z selects it)");
    const ComplexValue q = q_ferrers(index, x);
    // e^(-+ i pi k/2) = i^(-+k), applied as exact quarter turns
    const int turns = ((x > 0 ? -index.k() : index.k()) % 4 + 4) % 4;
    switch (turns) {
    case 1: return {-q.imag(), q.real()};
    case 2: return -q;
    case 3: return {q.imag(), -q.real()};
    default: return q;
    }
}

ComplexValue q_scalar(int l, double x)
{
    const GaussianPolynomial p = on_imaginary_axis(legendre_p(l));
    const GaussianPolynomial w = on_imaginary_axis(log_companion(l));
    auto eval = [x](const GaussianPolynomial& g) {
        double re = 0.0, im = 0.0;
        for (auto it = g.re.coefficients().rbegin(); it != g.re.coefficients().rend(); ++it)
            re = re * x + it->get_d();
        for (auto it = g.im.coefficients().rbegin(); it != g.im.coefficients().rend(); ++it)
            im = im * x + it->get_d();
        return ComplexValue{re, im};
    };
    return ComplexValue{0.0, 1.0} * eval(p) * std::atan(x) - eval(w);
}

OdeResidual ode_residual(const LegendreIndex& index, double x)
{
    const auto f = ferrers_function(index);
    const double k = index.k();
    const double l = index.l();
    const double one_plus_x2 = 1.0 + x * x;
    const double y = f->real_value(x);
    const double terms[] = {
        one_plus_x2 * f->real_second_derivative(x),
        2.0 * x * f->real_derivative(x),
        -l * (l + 1.0) * y,
        k * k / one_plus_x2 * y,
    };
    OdeResidual r;
    double sum = 0.0;
    for (double t : terms) {
        sum += t;
        r.largest_term = std::max(r.largest_term, std::abs(t));
    }
    r.absolute = std::abs(sum);
    return r;
}

} // namespace qleg
