#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

namespace degsim {

using Degree = std::int64_t;
using Count = std::int64_t;
using Rational = boost::rational<std::int64_t>;

/// Multiset of vertex degrees, stored as degree -> multiplicity.
///
/// Degree 0 never appears. The list form (one entry per vertex) is produced in
/// ascending degree order; samplers label vertex i with the i-th entry, so the
/// maximum-degree vertices carry the highest labels.
class DegreeSequence {
  public:
    DegreeSequence() = default;

    static DegreeSequence from_counts(const std::map<Degree, Count> &counts);
    static DegreeSequence from_list(std::span<const Degree> degrees);

    const std::map<Degree, Count> &counts() const { return counts_; }
    Count n() const { return n_; }
    std::int64_t degree_sum() const { return degree_sum_; }
    Count count_of(Degree d) const;
    Degree max_degree() const { return counts_.empty() ? 0 : counts_.rbegin()->first; }
    bool empty() const { return n_ == 0; }

    std::vector<Degree> to_list() const;

    // "#counts" header followed by "degree<TAB>multiplicity" lines.
    std::string to_counts_text() const;

    friend bool operator==(const DegreeSequence &, const DegreeSequence &) = default;

  private:
    std::map<Degree, Count> counts_;
    Count n_ = 0;
    std::int64_t degree_sum_ = 0;
};

/// Parses either list form (one positive degree per line) or count form
/// ("#counts" header, then "degree<TAB>multiplicity" lines). Blank lines are
/// ignored. Throws ParseError (with 1-based line number) or ValidationError.
DegreeSequence parse_sequence(std::string_view text);

/// Erdős–Gallai test plus even degree sum.
bool is_feasible(const DegreeSequence &seq);

struct InvariantReport {
    Count n = 0;
    std::int64_t degree_sum = 0;
    std::int64_t M = 0;   // sum of the degrees different from 2
    std::int64_t R = 0;   // degree mass from position jD upward (ascending order)
    Count jD = 0;         // 1-based
    Rational ratio_hat;   // sum d(d-2) / sum d
    Rational q_hat;       // sum d(d-2) / n
    bool well_behaved = false;
    std::int64_t lambda_thresh = 0;

    friend bool operator==(const InvariantReport &, const InvariantReport &) = default;
};

inline constexpr std::int64_t kDefaultLambda = 30;
inline constexpr double kDefaultEps = 0.1;
inline constexpr double kDefaultDelta = 0.01;

InvariantReport invariants(const DegreeSequence &seq, std::int64_t lambda_thresh = kDefaultLambda);

nlohmann::json to_json(const InvariantReport &report);

enum class Verdict { GiantWHP, NoGiantWHP, NotWellBehaved, Indeterminate };

std::string_view to_string(Verdict v);

struct Classification {
    Verdict verdict = Verdict::Indeterminate;
    double epsilon_used = 0;
    double delta_used = 0;
    std::int64_t lambda_thresh = 0;
    InvariantReport report;
};

/// Requires 0 < delta < eps <= 1. Throws InfeasibleSequence for sequences no
/// simple graph realizes.
Classification classify(const DegreeSequence &seq, double eps = kDefaultEps,
                        double delta = kDefaultDelta, std::int64_t lambda_thresh = kDefaultLambda);

struct Claim0Check {
    std::int64_t lhs = 0; // sum a_i (a_i - 2)
    std::int64_t rhs = 0; // j - 2 ell
    bool holds = false;
};

/// For positive integers a_1..a_j, none equal to 2, with sum a_i >= 2j - ell,
/// the weighted sum a_i(a_i - 2) is at least j - 2 ell.
Claim0Check check_claim0(std::span<const std::int64_t> a, std::int64_t ell);

struct RLowerBound {
    std::int64_t R = 0;
    std::int64_t bound = 0; // M - 2 (n - n_2)
    bool holds = false;
};

RLowerBound r_lower_bound_check(const DegreeSequence &seq);

} // namespace degsim
