#pragma once

#include <stdexcept>
#include <string>

namespace hsp {

/// Nonlinear solve did not reach the requested residual. Carries the last
/// iterate so callers can report or diagnose instead of guessing.
class solver_error : public std::runtime_error {
public:
    solver_error(const std::string& what, double res_a, double res_b, int iterations)
        : std::runtime_error(what), residual_a(res_a), residual_b(res_b), iterations(iterations) {}

    double residual_a;
    double residual_b;
    int iterations;
};

/// Requested a (dimension, representation, evaluation point) combination the
/// evaluator does not support. Always explicit, never a silent approximation.
class capability_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Constraint data admits no feasible point (used by the discretized oracle).
class infeasibility_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hsp
