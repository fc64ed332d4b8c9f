#pragma once

#include <cstdint>

#include <degsim/degseq.hpp>

namespace degsim {

struct ACLParams {
    double alpha = 0;
    double beta = 1;
};

struct ACLSequence {
    DegreeSequence sequence;
    // True when one degree-1 vertex was appended to make the degree sum even.
    bool parity_fixed = false;
};

inline constexpr std::int64_t kDefaultVertexBudget = 50'000'000;

/// Aiello–Chung–Lu degree sequence: floor(e^alpha / i^beta) vertices of degree
/// i for 1 <= i <= floor(e^(alpha/beta)). Throws Overflow when the maximum
/// degree or the vertex count exceeds vertex_budget.
ACLSequence acl_sequence(const ACLParams &p, std::int64_t vertex_budget = kDefaultVertexBudget);

/// Riemann zeta for real x > 1 to absolute error tol.
double zeta(double x, double tol = 1e-12);

/// Root of zeta(beta - 2) - 2 zeta(beta - 1) on the bracket (3.05, 3.95).
double beta0(double tol = 1e-8);

} // namespace degsim
