#ifndef RM_ERRORS_HPP
#define RM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rm {

// Base class for every failure the solvers can recover from by redrawing
// randomness. Callers catch Fail, not the concrete subclasses, unless they
// can react to the specific condition.
struct Fail : std::runtime_error {
    explicit Fail(const std::string& what) : std::runtime_error(what) {}
};

// A random expansion point (alpha, u0, t0) fell on a bad locus: some series
// with positive valuation had to be inverted.
struct BadExpansionPoint : Fail {
    BadExpansionPoint() : Fail("bad expansion point") {}
    explicit BadExpansionPoint(const std::string& w) : Fail(w) {}
};

// A nonzero leading coefficient in the Euclidean remainder sequence over the
// jet ring was not a unit.
struct SubresultantNotUnit : Fail {
    SubresultantNotUnit() : Fail("subresultant is not a unit") {}
};

// The Jacobian block used for Newton lifting is singular at a described
// point; the slice point y (or the change of variables) must be redrawn.
struct JacobianSingular : Fail {
    JacobianSingular() : Fail("jacobian singular at a lifting fiber point") {}
};

// Retry cap exhausted.
struct RandomnessExhausted : Fail {
    explicit RandomnessExhausted(const std::string& where)
        : Fail("randomness exhausted in " + where) {}
};

// An intermediate degree exceeded the caller-supplied budget.
struct BudgetExceeded : Fail {
    explicit BudgetExceeded(const std::string& w) : Fail(w) {}
};

// Hard usage/shape errors (not retryable).
struct ArityMismatch : std::invalid_argument {
    explicit ArityMismatch(const std::string& w) : std::invalid_argument(w) {}
};
struct SizeMismatch : std::invalid_argument {
    explicit SizeMismatch(const std::string& w) : std::invalid_argument(w) {}
};
struct RangeError : std::invalid_argument {
    explicit RangeError(const std::string& w) : std::invalid_argument(w) {}
};
struct ModuliNotCoprime : std::invalid_argument {
    ModuliNotCoprime() : std::invalid_argument("CRT moduli are not coprime") {}
};
struct LiesOverViolation : std::invalid_argument {
    explicit LiesOverViolation(const std::string& w) : std::invalid_argument(w) {}
};
struct MathError : std::logic_error {
    explicit MathError(const std::string& w) : std::logic_error(w) {}
};

struct ResolutionTooCoarse : std::runtime_error {
    explicit ResolutionTooCoarse(const std::string& w) : std::runtime_error(w) {}
};

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int line_, int col_, const std::string& w)
        : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                             std::to_string(col_) + ": " + w),
          line(line_), col(col_) {}
};

} // namespace rm

#endif
