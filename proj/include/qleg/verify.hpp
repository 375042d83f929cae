#ifndef QLEG_VERIFY_HPP
#define QLEG_VERIFY_HPP

// Identity-verification suites run by `qleg verify`.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qleg {

enum class Suite { exact, quadrature, all };

std::optional<Suite> parse_suite(std::string_view name);

struct CheckResult {
    std::string id;
    std::string description;
    bool passed = false;
    std::string detail;  // first violation, or a short summary when passing
    double seconds = 0.0;
};

/// exact: exact-arithmetic identities (polynomial structure, A_0, 3F2 family).
/// quadrature: orthogonality, normalization and order-recurrence integrals.
/// all: both, plus ODE residuals, decay, asymptotic series and boundary terms.
std::vector<CheckResult> run_verification(Suite suite);

} // namespace qleg

#endif // QLEG_VERIFY_HPP
