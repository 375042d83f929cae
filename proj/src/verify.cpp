#include "qleg/verify.hpp"

#include "qleg/eval.hpp"
#include "qleg/exactpoly.hpp"
#include "qleg/hypergeom.hpp"
#include "qleg/quadrature.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

namespace qleg {

namespace {

class Tally {
public:
    void expect(bool ok, const std::function<std::string()>& describe)
    {
        ++checked_;
        if (!ok && failures_++ == 0)
            first_ = describe();
    }
    bool passed() const { return failures_ == 0; }
    std::string detail() const
    {
        std::ostringstream os;
        if (passed())
            os << checked_ << " assertions";
        else
            os << failures_ << "/" << checked_ << " failed; first: " << first_;
        return os.str();
    }

private:
    int checked_ = 0;
    int failures_ = 0;
    std::string first_;
};

std::string idx(int k, int l) { return "(k=" + std::to_string(k) + ", l=" + std::to_string(l) + ")"; }

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

struct Check {
    const char* id;
    const char* description;
    std::function<void(Tally&)> body;
};

// --- exact suite -----------------------------------------------------------

void legendre_paths(Tally& t)
{
    for (int l = 0; l <= 40; ++l)
        t.expect(legendre_p(l) == legendre_p_explicit(l), [l] { return "P_" + std::to_string(l) + " differs"; });
}

void leibniz_vs_stepwise(Tally& t)
{
    for (int l = 0; l <= 11; ++l) {
        const RationalPolynomial p = legendre_p(l);
        for (int k = 1; k <= 12; ++k)
            t.expect(differentiate_log_product(p, k) == differentiate_log_product_stepwise(p, k),
                     [=] { return "Leibniz/stepwise mismatch " + idx(k, l); });
    }
}

void order_recurrence(Tally& t)
{
    for (int k = 2; k <= 12; ++k)
        for (int l = 0; l + 1 < k; ++l) {
            const RecurrenceSides s = order_recurrence_sides(k, l);
            t.expect(s.lhs == s.rhs, [=] { return "recurrence fails " + idx(k, l); });
        }
}

void a0_identity(Tally& t)
{
    for (int l = 0; l <= 30; ++l)
        t.expect(a0_sum(l) == Rational(a0_closed(l)), [l] { return "a0_sum != a0_closed at l=" + std::to_string(l); });
}

void saalschutz_family(Tally& t)
{
    for (int l = 0; l <= 20; ++l) {
        const SaalschutzParameters p = a0_family_parameters(l);
        const double e = p.a + p.b - p.c - p.n + 1.0;
        const double direct = f3f2_unit(p.a, p.b, -static_cast<double>(p.n), p.c, e);
        const double closed = saalschutz_3f2(p.a, p.b, p.n, p.c);
        t.expect(rel(direct, closed) <= 1e-12, [=] { return "Saalschutz mismatch at l=" + std::to_string(l); });
        t.expect(s_finite_sum(l) == s_closed(l), [l] { return "S(l) != 4^l/(l+1) at l=" + std::to_string(l); });
        t.expect(rel(s_via_f3f2(l), s_closed(l).get_d()) <= 1e-12,
                 [l] { return "C(2l,l) 3F2 != 4^l/(l+1) at l=" + std::to_string(l); });
    }
}

void numerator_structure(Tally& t)
{
    for (int k = 1; k <= 20; ++k)
        for (int l = 0; l < k; ++l) {
            const FerrersNumerator n = ferrers_numerator(LegendreIndex(k, l));
            t.expect(n.poly.has_integer_coefficients(), [=] { return "non-integer coefficient " + idx(k, l); });
            t.expect(n.poly.degree() == k - l - 1, [=] { return "degree != k-l-1 " + idx(k, l); });
            t.expect(n.poly.parity() == std::optional<int>((k - l - 1) % 2),
                     [=] { return "mixed parity " + idx(k, l); });
            t.expect(n.sigma == (k - l - 1) % 2, [=] { return "sigma mismatch " + idx(k, l); });
            if (k == l + 1)
                t.expect(n.poly == RationalPolynomial::constant(Rational(a0_closed(l))),
                         [=] { return "numerator != A0(l) " + idx(k, l); });
        }
}

// --- quadrature suite ------------------------------------------------------

void orthogonality(Tally& t)
{
    for (int k = 1; k <= 6; ++k) {
        double max_diag = 0.0;
        for (int l = 0; l < k; ++l)
            max_diag = std::max(max_diag, std::abs(normalization_exact(k, l).value()));
        for (int l = 0; l < k; ++l)
            for (int lp = l + 1; lp < k; ++lp) {
                const double v = std::abs(inner_product(k, l, lp, 1e-10).value);
                t.expect(v <= 1e-8 * max_diag, [=] { return "off-diagonal too large " + idx(k, l) + " lp=" + std::to_string(lp); });
            }
    }
}

void base_normalization(Tally& t)
{
    for (int l = 0; l <= 5; ++l) {
        const double want = factorial(2 * static_cast<unsigned>(l)).get_d() * std::numbers::pi;
        const double got = inner_product(l + 1, l, l, 1e-10).value.real();
        t.expect(rel(got, want) <= 1e-8, [=] { return "base normalization " + idx(l + 1, l); });
    }
}

void product_normalization(Tally& t)
{
    for (int k = 2; k <= 6; ++k)
        for (int l = 0; l + 1 < k; ++l) {
            const double want = normalization_exact(k, l).value();
            const double got = inner_product(k, l, l, 1e-10).value.real();
            t.expect(rel(got, want) <= 1e-8, [=] { return "product normalization " + idx(k, l); });
        }
}

void quadrature_recurrence(Tally& t)
{
    for (int k = 2; k <= 6; ++k)
        for (int l = 0; l + 1 < k; ++l) {
            const double ratio = inner_product(k, l, l, 1e-10).value.real() / inner_product(k - 1, l, l, 1e-10).value.real();
            const double want = static_cast<double>((l + k) * (l - k + 1));
            t.expect(rel(ratio, want) <= 1e-7, [=] { return "quadrature ratio " + idx(k, l); });
        }
}

// --- remaining numerical checks --------------------------------------------

void ode_samples(Tally& t)
{
    std::mt19937_64 rng(20240607);
    std::uniform_int_distribution<int> kd(1, 8);
    std::uniform_real_distribution<double> xd(-10.0, 10.0);
    for (int i = 0; i < 100; ++i) {
        const int k = kd(rng);
        const int l = std::uniform_int_distribution<int>(0, k - 1)(rng);
        const double x = xd(rng);
        const OdeResidual r = ode_residual(LegendreIndex(k, l), x);
        t.expect(r.relative() <= 1e-10, [=] { return "ODE residual " + idx(k, l) + " x=" + std::to_string(x); });
    }
}

void decay_law(Tally& t)
{
    for (int k = 1; k <= 6; ++k)
        for (int l = 0; l < k; ++l) {
            const double slope = decay_exponent(k, l);
            t.expect(std::abs(slope + (l + 1)) <= 0.02, [=] { return "decay slope " + idx(k, l) + " = " + std::to_string(slope); });
        }
}

void asymptotic_series(Tally& t)
{
    for (int k = 1; k <= 4; ++k)
        for (int l = 0; l < k; ++l)
            for (double x : {10.0, -10.0, 50.0, -50.0}) {
                const std::complex<double> exact = q_ferrers(LegendreIndex(k, l), x);
                const std::complex<double> approx = q_asymptotic(k, l, x).value;
                const double err = std::abs(approx - exact) / std::abs(exact);
                const double bound = std::abs(x) == 10.0 ? 1e-4 : 1e-8;
                t.expect(err <= bound, [=] { return "asymptotic series " + idx(k, l) + " x=" + std::to_string(x); });
            }
}

void boundary_terms(Tally& t)
{
    const double m10 = std::abs(boundary_term(1, -0.25, -0.75, 10.0).upper);
    const double m100 = std::abs(boundary_term(1, -0.25, -0.75, 100.0).upper);
    t.expect(m100 >= m10, [=] { return "fractional boundary term decays: " + std::to_string(m10) + " -> " + std::to_string(m100); });
    const std::array<double, 3> as{1e2, 1e3, 1e4};
    const double slope = boundary_decay_exponent(2, 1.0, 0.0, as);
    t.expect(std::abs(slope + 2.0) <= 0.1, [=] { return "integer boundary decay exponent " + std::to_string(slope); });
}

std::vector<Check> exact_checks()
{
    return {
        {"exact.legendre", "Rodrigues P_l equals explicit sum, l <= 40", legendre_paths},
        {"exact.leibniz", "Leibniz expansion equals stepwise differentiation, k <= 12", leibniz_vs_stepwise},
        {"exact.recurrence", "order-lowering identity holds exactly, l+1 < k <= 12", order_recurrence},
        {"exact.a0", "a0_sum(l) == (-1)^(l+1) 2^l l! exactly, l <= 30", a0_identity},
        {"exact.saalschutz", "3F2 family matches Saalschutz and S(l) = 4^l/(l+1), l <= 20", saalschutz_family},
        {"exact.numerators", "integer, degree k-l-1, single parity, A0 at k=l+1, k <= 20", numerator_structure},
    };
}

std::vector<Check> quadrature_checks()
{
    return {
        {"quadrature.orthogonality", "|<Q_l, Q_lp>| <= 1e-8 max diagonal, k <= 6", orthogonality},
        {"quadrature.base", "<Q_l, Q_l> = (2l)! pi at k = l+1, l <= 5", base_normalization},
        {"quadrature.product", "<Q_l, Q_l> = (2l)! pi prod (l+i)(l-i+1), l+1 < k <= 6", product_normalization},
        {"quadrature.recurrence", "quadrature ratio k/(k-1) = (l+k)(l-k+1), l+1 < k <= 6", quadrature_recurrence},
    };
}

std::vector<Check> numeric_checks()
{
    return {
        {"numeric.ode", "relative ODE residual <= 1e-10 at 100 random samples", ode_samples},
        {"numeric.decay", "log-log slope = -(l+1) +- 0.02, k <= 6", decay_law},
        {"numeric.asymptotic", "expansion matches closed form (1e-4 at |x|=10, 1e-8 at |x|=50), k <= 4", asymptotic_series},
        {"numeric.boundary", "fractional bracket non-decaying; integer bracket decays like a^-2", boundary_terms},
    };
}

} // namespace

std::optional<Suite> parse_suite(std::string_view name)
{
    if (name == "exact")
        return Suite::exact;
    if (name == "quadrature")
        return Suite::quadrature;
    if (name == "all")
        return Suite::all;
    return std::nullopt;
}

std::vector<CheckResult> run_verification(Suite suite)
{
    std::vector<Check> checks;
    if (suite == Suite::exact || suite == Suite::all)
        for (auto& c : exact_checks())
            checks.push_back(std::move(c));
    if (suite == Suite::quadrature || suite == Suite::all)
        for (auto& c : quadrature_checks())
            checks.push_back(std::move(c));
    if (suite == Suite::all)
        for (auto& c : numeric_checks())
            checks.push_back(std::move(c));

    std::vector<CheckResult> results;
    for (const Check& c : checks) {
        CheckResult r{c.id, c.description, false, {}, 0.0};
        const auto start = std::chrono::steady_clock::now();
        Tally tally;
        try {
            c.body(tally);
            r.passed = tally.passed();
            r.detail = tally.detail();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace qleg
