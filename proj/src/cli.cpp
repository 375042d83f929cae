#include "qleg/cli.hpp"

#include "qleg/errors.hpp"
#include "qleg/eval.hpp"
#include "qleg/exactpoly.hpp"
#include "qleg/hypergeom.hpp"
#include "qleg/quadrature.hpp"
#include "qleg/special.hpp"
#include "qleg/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qleg::cli {

namespace {

using nlohmann::ordered_json;

std::string number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string complex_text(std::complex<double> v)
{
    std::string s = number(v.real());
    s += v.imag() < 0 || std::signbit(v.imag()) ? "-" : "+";
    s += number(std::abs(v.imag())) + "i";
    return s;
}

ordered_json complex_json(std::complex<double> v) { return {{"re", v.real()}, {"im", v.imag()}}; }

// A flag value the command cannot accept; reported as a usage error.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

int integral_degree(double l, const char* flag)
{
    if (!is_integer(l))
        throw UsageError(std::string(flag) + " must be an integer for this command");
    return static_cast<int>(l);
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump() << '\n'; }

int cmd_eval(const CliConfig& c, std::ostream& out)
{
    const LegendreIndex index(c.k, integral_degree(c.l, "--l"));
    const ComplexValue v = c.hobson ? q_hobson(index, c.x) : q_ferrers(index, c.x);
    if (c.format == "json")
        emit(out, complex_json(v));
    else if (c.format == "csv")
        out << "re,im\n" << number(v.real()) << ',' << number(v.imag()) << '\n';
    else
        out << complex_text(v) << '\n';
    return kExitOk;
}

int cmd_poly(const CliConfig& c, std::ostream& out)
{
    const LegendreIndex index(c.k, integral_degree(c.l, "--l"));
    const FerrersNumerator n = ferrers_numerator(index);
    const std::vector<Integer> coeffs = n.integer_coefficients();
    const bool base = index.k() == index.l() + 1;
    if (c.format == "json") {
        ordered_json j;
        j["k"] = index.k();
        j["l"] = index.l();
        j["sigma"] = n.sigma;
        j["degree"] = n.poly.degree();
        ordered_json list = ordered_json::array();
        for (const auto& v : coeffs)
            list.push_back(v.get_str());
        j["coefficients"] = list;
        if (base)
            j["a0"] = a0_closed(index.l()).get_str();
        emit(out, j);
    } else if (c.format == "csv") {
        out << "power,coefficient\n";
        for (std::size_t s = 0; s < coeffs.size(); ++s)
            out << s << ',' << coeffs[s].get_str() << '\n';
    } else {
        out << "Q^" << index.k() << "_" << index.l() << "(ix) = i^" << n.sigma << " * (" << n.poly.to_string('x')
            << ") / (1+x^2)^(" << index.k() << "/2)\n";
        if (base)
            out << "A0(" << index.l() << ") = " << a0_closed(index.l()).get_str() << '\n';
    }
    return kExitOk;
}

int cmd_a0(const CliConfig& c, std::ostream& out)
{
    const int l = integral_degree(c.l, "--l");
    const Integer closed = a0_closed(l);
    const Rational sum = a0_sum(l);
    const bool equal = sum == Rational(closed);
    if (c.format == "json") {
        emit(out, ordered_json{{"l", l}, {"closed", closed.get_str()}, {"sum", sum.get_str()}, {"equal", equal}});
    } else if (c.format == "csv") {
        out << "l,closed,sum,equal\n" << l << ',' << closed.get_str() << ',' << sum.get_str() << ','
            << (equal ? "true" : "false") << '\n';
    } else {
        out << "closed: " << closed.get_str() << ", sum: " << sum.get_str() << ", equal: " << (equal ? "true" : "false")
            << '\n';
    }
    return kExitOk;
}

int cmd_gram(const CliConfig& c, std::ostream& out)
{
    const GramReport r = gram_matrix(c.k, c.tol, c.threads);
    if (c.format == "csv") {
        out << "l,lp,re,im,expected_re,deviation\n";
        for (int l = 0; l < r.k; ++l)
            for (int lp = 0; lp < r.k; ++lp) {
                const auto& e = r.entries[static_cast<std::size_t>(l)][static_cast<std::size_t>(lp)];
                out << l << ',' << lp << ',' << number(e.value.real()) << ',' << number(e.value.imag()) << ','
                    << number(r.expected_value(l, lp)) << ',' << number(r.deviation(l, lp)) << '\n';
            }
    } else if (c.format == "json") {
        ordered_json entries = ordered_json::array();
        for (int l = 0; l < r.k; ++l)
            for (int lp = 0; lp < r.k; ++lp) {
                const auto& e = r.entries[static_cast<std::size_t>(l)][static_cast<std::size_t>(lp)];
                entries.push_back({{"l", l},
                                   {"lp", lp},
                                   {"value", complex_json(e.value)},
                                   {"abs_error_estimate", e.abs_error_estimate},
                                   {"converged", e.converged},
                                   {"expected_pi_coefficient",
                                    r.expected[static_cast<std::size_t>(l)][static_cast<std::size_t>(lp)].get_str()},
                                   {"expected", r.expected_value(l, lp)},
                                   {"deviation", r.deviation(l, lp)}});
            }
        emit(out, ordered_json{{"k", r.k},
                               {"tol", r.tol},
                               {"converged", r.converged},
                               {"max_abs_deviation", r.max_abs_deviation},
                               {"entries", entries}});
    } else {
        for (int l = 0; l < r.k; ++l) {
            for (int lp = 0; lp < r.k; ++lp)
                out << (lp ? "  " : "") << complex_text(r.entries[static_cast<std::size_t>(l)][static_cast<std::size_t>(lp)].value);
            out << '\n';
        }
        out << "max deviation: " << number(r.max_abs_deviation) << '\n';
    }
    return r.converged ? kExitOk : kExitFailure;
}

int cmd_integrate(const CliConfig& c, std::ostream& out)
{
    const int l = integral_degree(c.l, "--l");
    const QuadratureResult q = inner_product(c.k, l, c.lp, c.tol);
    const PiMultiple expected = l == c.lp ? normalization_exact(c.k, l) : PiMultiple{Rational(0)};
    if (c.format == "json") {
        emit(out, ordered_json{{"k", c.k},
                               {"l", l},
                               {"lp", c.lp},
                               {"value", complex_json(q.value)},
                               {"abs_error_estimate", q.abs_error_estimate},
                               {"evaluations", q.evaluations},
                               {"converged", q.converged},
                               {"expected_pi_coefficient", expected.coefficient.get_str()},
                               {"expected", expected.value()}});
    } else if (c.format == "csv") {
        out << "re,im,abs_error_estimate,evaluations,converged\n"
            << number(q.value.real()) << ',' << number(q.value.imag()) << ',' << number(q.abs_error_estimate) << ','
            << q.evaluations << ',' << (q.converged ? "true" : "false") << '\n';
    } else {
        out << "value: " << complex_text(q.value) << "\nerror estimate: " << number(q.abs_error_estimate)
            << "\nevaluations: " << q.evaluations << "\nexpected: " << expected.coefficient.get_str() << " pi\n";
    }
    return kExitOk;
}

int cmd_asym(const CliConfig& c, std::ostream& out)
{
    const SeriesOutcome s = q_asymptotic(c.k, c.l, c.x, c.terms);
    if (c.format == "json") {
        emit(out, ordered_json{{"k", c.k},
                               {"l", c.l},
                               {"x", c.x},
                               {"value", complex_json(s.value)},
                               {"terms_used", s.terms_used},
                               {"converged", s.converged},
                               {"truncation_estimate", s.truncation_estimate},
                               {"purity_snapped", s.purity_snapped}});
    } else if (c.format == "csv") {
        out << "re,im,terms_used,converged,truncation_estimate\n"
            << number(s.value.real()) << ',' << number(s.value.imag()) << ',' << s.terms_used << ','
            << (s.converged ? "true" : "false") << ',' << number(s.truncation_estimate) << '\n';
    } else {
        out << "value: " << complex_text(s.value) << "\nterms used: " << s.terms_used
            << "\ntruncation estimate: " << number(s.truncation_estimate) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const CliConfig& c, std::ostream& out, std::ostream& err)
{
    const auto suite = parse_suite(c.suite);
    if (!suite)
        throw ConstraintError("unknown suite " + c.suite);
    const std::vector<CheckResult> results = run_verification(*suite);
    bool all = true;
    ordered_json checks = ordered_json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        if (!r.passed)
            err << ordered_json{{"id", r.id}, {"detail", r.detail}}.dump() << '\n';
        checks.push_back({{"id", r.id}, {"description", r.description}, {"passed", r.passed}, {"detail", r.detail}});
    }
    if (c.format == "json") {
        emit(out, ordered_json{{"suite", c.suite}, {"passed", all}, {"checks", checks}});
    } else if (c.format == "csv") {
        out << "id,passed\n";
        for (const auto& r : results)
            out << r.id << ',' << (r.passed ? "true" : "false") << '\n';
    } else {
        for (const auto& r : results)
            out << (r.passed ? "PASS " : "FAIL ") << r.id << "  " << r.description << "  [" << r.detail << "]\n";
    }
    return all ? kExitOk : kExitFailure;
}

} // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        if (config.command == "eval")
            return cmd_eval(config, out);
        if (config.command == "poly")
            return cmd_poly(config, out);
        if (config.command == "a0")
            return cmd_a0(config, out);
        if (config.command == "gram")
            return cmd_gram(config, out);
        if (config.command == "integrate")
            return cmd_integrate(config, out);
        if (config.command == "asym")
            return cmd_asym(config, out);
        if (config.command == "verify")
            return cmd_verify(config, out, err);
        err << "unknown command: " << config.command << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CliConfig c;
    CLI::App app{"Associated Legendre functions of the second kind at imaginary argument"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"json", "csv", "text"};

    auto add_format = [&](CLI::App* s) {
        s->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
    };

    auto* eval = app.add_subcommand("eval", "Evaluate Q^k_l(ix)");
    eval->add_option("--k", c.k, "Order k")->required();
    eval->add_option("--l", c.l, "Degree l")->required();
    eval->add_option("--x", c.x, "Real argument x")->required();
    eval->add_flag("--hobson", c.hobson, "Return the Hobson-convention value");
    add_format(eval);

    auto* poly = app.add_subcommand("poly", "Exact integer numerator N_kl");
    poly->add_option("--k", c.k, "Order k")->required();
    poly->add_option("--l", c.l, "Degree l")->required();
    add_format(poly);

    auto* a0 = app.add_subcommand("a0", "A0(l) in closed form and as the finite sum");
    a0->add_option("--l", c.l, "Degree l")->required();
    add_format(a0);

    auto* gram = app.add_subcommand("gram", "Gram matrix of Q^k_l, l < k");
    gram->add_option("--k", c.k, "Order k")->required();
    gram->add_option("--tol", c.tol, "Quadrature tolerance");
    gram->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1u, 64u));
    add_format(gram);

    auto* integrate = app.add_subcommand("integrate", "Inner product of Q^k_l and Q^k_lp over the real line");
    integrate->add_option("--k", c.k, "Order k")->required();
    integrate->add_option("--l", c.l, "Degree l")->required();
    integrate->add_option("--lp", c.lp, "Degree l'")->required();
    integrate->add_option("--tol", c.tol, "Quadrature tolerance");
    add_format(integrate);

    auto* asym = app.add_subcommand("asym", "Large-|x| expansion of Q^k_l(ix), real l > -1");
    asym->add_option("--k", c.k, "Order k")->required();
    asym->add_option("--l", c.l, "Degree l")->required();
    asym->add_option("--x", c.x, "Real argument, |x| > 1")->required();
    asym->add_option("--terms", c.terms, "Maximum number of terms")->check(CLI::PositiveNumber);
    add_format(asym);

    auto* verify = app.add_subcommand("verify", "Run the identity-verification suites");
    verify->add_option("--suite", c.suite, "exact | quadrature | all")
        ->check(CLI::IsMember({"exact", "quadrature", "all"}));
    verify->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }
    c.command = app.get_subcommands().front()->get_name();
    return run(c, out, err);
}

} // namespace qleg::cli
