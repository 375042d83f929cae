#include "qleg/quadrature.hpp"

#include "qleg/errors.hpp"
#include "qleg/eval.hpp"
#include "qleg/hypergeom.hpp"
#include "qleg/special.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <thread>

namespace qleg {

namespace {

using cplx = std::complex<double>;

// Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

struct Panel {
    double lo;
    double hi;
    cplx result;
    double error;
};

struct WorstFirst {
    bool operator()(const Panel& a, const Panel& b) const
    {
        if (a.error != b.error)
            return a.error < b.error;
        return a.lo > b.lo;
    }
};

template <class G>
Panel kronrod15(const G& g, double lo, double hi)
{
    const double centre = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    std::array<cplx, 7> f1, f2;

    const cplx fc = g(centre);
    cplx res_gauss = fc * kWg[3];
    cplx res_kronrod = fc * kWgk[7];
    double res_abs = std::abs(res_kronrod);
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        f1[j] = g(centre - dx);
        f2[j] = g(centre + dx);
        const cplx sum = f1[j] + f2[j];
        res_kronrod += kWgk[j] * sum;
        res_abs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1)
            res_gauss += kWg[j / 2] * sum;
    }
    const cplx mean = 0.5 * res_kronrod;
    double res_asc = kWgk[7] * std::abs(fc - mean);
    for (std::size_t j = 0; j < 7; ++j)
        res_asc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

    const double scale = std::abs(half);
    res_abs *= scale;
    res_asc *= scale;
    double err = std::abs((res_kronrod - res_gauss) * half);
    if (res_asc != 0.0 && err != 0.0)
        err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
    if (res_abs > kTiny / (50.0 * kEps))
        err = std::max(50.0 * kEps * res_abs, err);
    return {lo, hi, res_kronrod * half, err};
}

constexpr std::size_t kEvaluationsPerPanel = 30;  // 15 nodes, two half-lines

LegendreIndex checked_index(int k, int l, const char* what)
{
    try {
        return LegendreIndex(k, l);
    } catch (const ConstraintError& e) {
        throw ConstraintError(std::string(what) + ": " + e.what());
    }
}

} // namespace

QuadratureBudgetExceeded::QuadratureBudgetExceeded(const QuadratureResult& best)
    : std::runtime_error("quadrature did not reach its tolerance within the evaluation budget (best " +
                         std::to_string(best.value.real()) + (best.value.imag() < 0 ? "" : "+") +
                         std::to_string(best.value.imag()) + "i, error estimate " +
                         std::to_string(best.abs_error_estimate) + ")"),
      best_(best)
{
}

QuadratureResult integrate_real_line(const Integrand& f, double abs_tol, double rel_tol,
                                     std::size_t max_evaluations)
{
    auto folded = [&f](double u) {
        const double x = std::tan(u);
        return (f(x) + f(-x)) * (1.0 + x * x);
    };

    QuadratureResult out;
    std::priority_queue<Panel, std::vector<Panel>, WorstFirst> heap;
    Panel first = kronrod15(folded, 0.0, 0.5 * std::numbers::pi);
    out.evaluations += kEvaluationsPerPanel;
    cplx total = first.result;
    double error = first.error;
    heap.push(first);

    auto satisfied = [&] { return error <= std::max(abs_tol, rel_tol * std::abs(total)); };

    while (!satisfied()) {
        if (out.evaluations + 2 * kEvaluationsPerPanel > max_evaluations)
            break;
        Panel worst = heap.top();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi) || (worst.hi - worst.lo) < 4.0 * kEps)
            break;
        heap.pop();
        Panel left = kronrod15(folded, worst.lo, mid);
        Panel right = kronrod15(folded, mid, worst.hi);
        out.evaluations += 2 * kEvaluationsPerPanel;
        total += left.result + right.result - worst.result;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum in a fixed order so the reported value does not carry the
    // running-update rounding.
    std::vector<Panel> panels;
    panels.reserve(heap.size());
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
    total = 0.0;
    error = 0.0;
    for (const Panel& p : panels) {
        total += p.result;
        error += p.error;
    }
    out.value = total;
    out.abs_error_estimate = error;
    out.converged = satisfied();
    if (!out.converged)
        throw QuadratureBudgetExceeded(out);
    return out;
}

QuadratureResult inner_product(int k, int l, int lp, double tol)
{
    const auto fa = ferrers_function(checked_index(k, l, "inner_product"));
    const auto fb = ferrers_function(checked_index(k, lp, "inner_product"));
    if (!(tol > 0.0))
        throw ConstraintError("inner_product: tol must be positive");

    // Coarse L1 scale for the absolute tolerance; off-diagonal values sit
    // near zero, so a purely relative criterion would be unreachable.
    const QuadratureResult scale = integrate_real_line(
        [&](double x) { return std::complex<double>(std::abs(fa->real_value(x) * fb->real_value(x)), 0.0); },
        0.0, 1e-3);

    QuadratureResult r = integrate_real_line([&](double x) { return fa->value(x) * fb->value(x); },
                                             tol * std::abs(scale.value), tol);
    r.evaluations += scale.evaluations;
    return r;
}

double PiMultiple::value() const { return coefficient.get_d() * std::numbers::pi; }

PiMultiple normalization_exact(int k, int l)
{
    checked_index(k, l, "normalization_exact");
    Integer c = factorial(2 * static_cast<unsigned>(l));
    for (int i = l + 2; i <= k; ++i)
        c *= Integer(l + i) * Integer(l - i + 1);
    return {Rational(c)};
}

double GramReport::expected_value(int l, int lp) const
{
    return expected.at(static_cast<std::size_t>(l)).at(static_cast<std::size_t>(lp)).get_d() * std::numbers::pi;
}

double GramReport::deviation(int l, int lp) const
{
    const auto& e = entries.at(static_cast<std::size_t>(l)).at(static_cast<std::size_t>(lp));
    return std::abs(e.value - std::complex<double>(expected_value(l, lp), 0.0));
}

GramReport gram_matrix(int k, double tol, unsigned threads)
{
    if (k < 1 || k > 10)
        throw ConstraintError("gram_matrix: requires 1 <= k <= 10, got " + std::to_string(k));
    const auto n = static_cast<std::size_t>(k);
    GramReport report;
    report.k = k;
    report.tol = tol;
    report.entries.assign(n, std::vector<QuadratureResult>(n));
    report.expected.assign(n, std::vector<Rational>(n, Rational(0)));

    std::vector<std::pair<int, int>> work;
    for (int l = 0; l < k; ++l) {
        report.expected[static_cast<std::size_t>(l)][static_cast<std::size_t>(l)] =
            normalization_exact(k, l).coefficient;
        for (int lp = l; lp < k; ++lp)
            work.emplace_back(l, lp);
    }

    std::vector<QuadratureResult> results(work.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < work.size(); i = next++) {
            try {
                results[i] = inner_product(k, work[i].first, work[i].second, tol);
            } catch (const QuadratureBudgetExceeded& e) {
                results[i] = e.best_estimate();
            }
        }
    };
    const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(work.size())));
    if (count == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < count; ++t)
            pool.emplace_back(worker);
    }

    for (std::size_t i = 0; i < work.size(); ++i) {
        const auto [l, lp] = work[i];
        report.entries[static_cast<std::size_t>(l)][static_cast<std::size_t>(lp)] = results[i];
        report.entries[static_cast<std::size_t>(lp)][static_cast<std::size_t>(l)] = results[i];
        report.converged = report.converged && results[i].converged;
    }
    for (int l = 0; l < k; ++l)
        for (int lp = 0; lp < k; ++lp)
            report.max_abs_deviation = std::max(report.max_abs_deviation, report.deviation(l, lp));
    return report;
}

BoundaryTerm boundary_term(int k, double l, double n, double a)
{
    if (l == n)
        throw PoleError("boundary_term: l == n divides by zero");
    if (!(a > 1.0))
        throw DomainError("boundary_term: requires a > 1");

    auto bracket = [&](double x, std::complex<double> ql, std::complex<double> dql, std::complex<double> qn,
                       std::complex<double> dqn) { return (1.0 + x * x) / (l - n) * (qn * dql - ql * dqn); };

    if (is_integer(l) && is_integer(n)) {
        const auto fl = ferrers_function(checked_index(k, static_cast<int>(l), "boundary_term"));
        const auto fn = ferrers_function(checked_index(k, static_cast<int>(n), "boundary_term"));
        auto at = [&](double x) { return bracket(x, fl->value(x), fl->derivative(x), fn->value(x), fn->derivative(x)); };
        return {at(a), at(-a)};
    }
    const bool fractional = l > -1.0 && l < 0.0 && n > -1.0 && n < 0.0;
    if (!fractional)
        throw DomainError("boundary_term: supported regimes are integer k > l, n >= 0 or l, n in (-1, 0)");
    if (a < 10.0)
        throw DomainError("boundary_term: the expansion for l, n in (-1, 0) needs a >= 10");
    auto at = [&](double x) {
        const AsymptoticValue ql = q_asymptotic_with_derivative(k, l, x);
        const AsymptoticValue qn = q_asymptotic_with_derivative(k, n, x);
        return bracket(x, ql.value.value, ql.derivative, qn.value.value, qn.derivative);
    };
    return {at(a), at(-a)};
}

double loglog_slope(std::span<const double> xs, std::span<const double> ys)
{
    if (xs.size() != ys.size() || xs.size() < 2)
        throw ConstraintError("loglog_slope: need at least two matching points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double lx = std::log(xs[i]);
        const double ly = std::log(std::abs(ys[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

double decay_exponent(int k, int l)
{
    const auto f = ferrers_function(checked_index(k, l, "decay_exponent"));
    std::array<double, 5> xs{}, ys{};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        xs[i] = std::pow(10.0, 2.0 + 0.5 * static_cast<double>(i));
        ys[i] = std::abs(f->value(xs[i]));
    }
    return loglog_slope(xs, ys);
}

double boundary_decay_exponent(int k, double l, double n, std::span<const double> a_values)
{
    std::vector<double> ys;
    ys.reserve(a_values.size());
    for (double a : a_values)
        ys.push_back(std::abs(boundary_term(k, l, n, a).upper));
    return loglog_slope(a_values, ys);
}

} // namespace qleg
