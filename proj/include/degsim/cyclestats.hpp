#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <degsim/graph.hpp>
#include <degsim/rng.hpp>

namespace degsim {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact t for which the big-integer columns are kept; larger t use the
/// normalized double recurrence only.
inline constexpr std::int64_t kExactLimit = 300;

/// Number C_t of labeled 2-regular simple graphs on t vertices.
///
/// `exact` holds C_0..C_min(tmax, kExactLimit) from
///   C_t = sum_{l=3..t} binom(t-1, l-1) (l-1)!/2 C_{t-l}.
/// `normalized` holds c_t = C_t / t! for every t <= tmax from the independent
/// prefix-sum form c_t = (1 / 2t) sum_{k <= t-3} c_k, and `logspace` holds
/// log C_t (-inf where C_t = 0).
class CycleCountTable {
  public:
    explicit CycleCountTable(std::int64_t tmax);

    std::int64_t tmax() const { return tmax_; }
    std::int64_t exact_limit() const { return static_cast<std::int64_t>(exact_.size()) - 1; }
    bool has_exact(std::int64_t t) const { return t >= 0 && t <= exact_limit(); }

    const BigInt &exact(std::int64_t t) const;
    double normalized(std::int64_t t) const;
    double log_count(std::int64_t t) const;

    const std::vector<BigInt> &exact_values() const { return exact_; }
    const std::vector<double> &logspace() const { return log_; }

  private:
    std::int64_t tmax_;
    std::vector<BigInt> exact_;
    std::vector<double> normalized_;
    std::vector<double> log_;
};

inline CycleCountTable c_table(std::int64_t tmax) { return CycleCountTable(tmax); }

/// Probability that a fixed vertex lies on a cycle of length ell in a uniform
/// 2-regular graph on t labeled vertices. Requires 3 <= ell <= t and C_t > 0.
BigRational p_cycle_exact(std::int64_t ell, std::int64_t t, const CycleCountTable &table);
double p_cycle(std::int64_t ell, std::int64_t t, const CycleCountTable &table);

/// Uniform 2-regular graph on labels 0..t-1 as a list of cycles. Each cycle
/// starts at its smallest label. t must be 0 or at least 3.
std::vector<std::vector<Vertex>> sample_2regular(std::int64_t t, std::uint64_t seed,
                                                 const CycleCountTable &table);

std::vector<std::vector<Vertex>> sample_2regular(std::int64_t t, CounterRng &rng,
                                                 const CycleCountTable &table);

/// N(s, t, m') = binom(s+t, t) (s+m'-1)!/(m'-1)! C_t: graphs with t degree-2
/// vertices in cycles and s on the m' non-fixed kernel paths.
BigInt two_phase_count(std::int64_t s, std::int64_t t, std::int64_t mprime,
                       const CycleCountTable &table);

/// q_t for t = 0..n2prime (entries 1 and 2 are zero). Computed in log space.
std::vector<double> q_distribution(std::int64_t n2prime, std::int64_t mprime,
                                   const CycleCountTable &table);

/// Exact q_t as rationals; requires n2prime <= 30.
std::vector<BigRational> q_distribution_exact(std::int64_t n2prime, std::int64_t mprime,
                                              const CycleCountTable &table);

inline constexpr std::int64_t kExactQLimit = 30;

/// Probability that a uniform 2-regular graph on t vertices has a cycle of
/// length at least L.
BigRational longest_cycle_tail_exact(std::int64_t t, std::int64_t L, const CycleCountTable &table);
double longest_cycle_tail(std::int64_t t, std::int64_t L, const CycleCountTable &table);

} // namespace degsim
