#ifndef PCFE_ERRORS_HPP
#define PCFE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pcfe {

// Invalid constructor / operation parameter (e.g. nonpositive rate).
struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed user-supplied data (grids, config files, CSV).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation asked for a capability the inputs do not provide
// (missing inverse, non-monotone candidate, unsupported order).
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A function evaluation left its valid domain; carries the abscissa.
struct EvalDomainError : std::runtime_error {
    double abscissa;
    EvalDomainError(const std::string& what, double x)
        : std::runtime_error(what + " at x=" + std::to_string(x)), abscissa(x) {}
};

// Root bracketing failed: no sign change over the given interval.
struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A required moment integral diverged or failed its accuracy target.
struct MomentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integrand singularity detected at an interior node.
struct SingularityError : std::runtime_error {
    double abscissa;
    SingularityError(const std::string& what, double x)
        : std::runtime_error(what + " at x=" + std::to_string(x)), abscissa(x) {}
};

}  // namespace pcfe

#endif
