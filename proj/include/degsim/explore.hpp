#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include <degsim/kernel.hpp>

namespace degsim {

inline constexpr double kDefaultOmega = 1e-4;

/// Smallest set of highest-degree kernel vertices whose degrees sum to at
/// least 5 omega^(1/4) M (ties broken by ascending label).
std::vector<Vertex> priming_set(const KernelMultigraph &h, double omega = kDefaultOmega);

/// Same rule with the degree-mass threshold given directly.
std::vector<Vertex> priming_set_for_mass(const KernelMultigraph &h, double threshold);

struct ExplorationStep {
    std::int64_t t = 0;
    std::optional<Vertex> v;   // empty when w was drawn proportionally to degree
    Vertex w = 0;
    std::int64_t degree_w = 0;
    std::int64_t dprime = 0;   // loops at w plus further edges from w into S_{t-1}
    std::int64_t X = 0;        // edges between S_t and the rest of the kernel
    std::int64_t Xprime = 0;   // X'_0 + sum (d(w_i) - 2)
    std::int64_t remaining_mass = 0; // degree sum outside S_t
};

enum class StopReason { Exhausted, XZero, Budget };

std::string_view to_string(StopReason r);

struct ExplorationTrace {
    std::vector<Vertex> S0;
    std::int64_t X0 = 0;
    std::int64_t Xprime0 = 0;
    std::vector<ExplorationStep> steps;
    StopReason stop_reason = StopReason::Exhausted;
};

struct ExploreOptions {
    std::int64_t budget = -1; // < 0: |V(H)|
    bool stop_at_zero = false;
};

/// Exploration of the kernel from S0. While edges leave S, the smallest-labeled
/// boundary vertex v_t exposes a uniformly random one of its boundary edges,
/// whose far end becomes w_t; otherwise w_t is drawn outside S with
/// probability proportional to its degree.
///
/// dprime counts the loops at w_t and the edges from w_t to S_{t-1} other than
/// the exposed one, so X_t = X_{t-1} + d(w_t) - 2 - 2 dprime holds exactly
/// after every non-restart step, parallel edges included.
ExplorationTrace explore(const KernelMultigraph &h, const std::vector<Vertex> &S0,
                         std::uint64_t seed, const ExploreOptions &options = {});

/// Trace CSV: "t,v,w,deg_w,dprime,X,Xprime", labels 1-indexed, v blank on restarts.
void write_trace_csv(std::ostream &out, const ExplorationTrace &trace);

} // namespace degsim
