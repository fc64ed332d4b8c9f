#include <degsim/cyclestats.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <degsim/errors.hpp>

namespace degsim {

namespace {

// (l-1)!/2 * binom(t-1, l-1) = (t-1)! / (t-l)! / 2: labeled cycles of length l
// through a fixed vertex, the rest chosen from t-1 others.
BigInt cycles_through(std::int64_t ell, std::int64_t t) {
    BigInt falling = 1;
    for (std::int64_t k = t - ell + 1; k <= t - 1; ++k)
        falling *= k;
    return falling / 2;
}

double log_of(const BigInt &value) {
    if (value == 0)
        return -std::numeric_limits<double>::infinity();
    const auto bits = static_cast<long>(boost::multiprecision::msb(value));
    if (bits < 900)
        return std::log(value.convert_to<double>());
    const long shift = bits - 60;
    const BigInt top = value >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

void require_range(std::int64_t t, const CycleCountTable &table) {
    if (t < 0 || t > table.tmax())
        throw DomainError("t = " + std::to_string(t) + " outside the cycle-count table");
}

} // namespace

CycleCountTable::CycleCountTable(std::int64_t tmax) : tmax_(tmax) {
    if (tmax < 0)
        throw DomainError("tmax must be non-negative");
    const auto exact_max = std::min(tmax, kExactLimit);
    exact_.assign(static_cast<std::size_t>(exact_max + 1), 0);
    exact_[0] = 1;
    for (std::int64_t t = 3; t <= exact_max; ++t) {
        BigInt total = 0;
        for (std::int64_t ell = 3; ell <= t; ++ell)
            if (exact_[t - ell] != 0)
                total += cycles_through(ell, t) * exact_[t - ell];
        exact_[t] = total;
    }

    normalized_.assign(static_cast<std::size_t>(tmax + 1), 0.0);
    normalized_[0] = 1.0;
    double prefix = 0; // sum_{k <= t-3} c_k
    for (std::int64_t t = 3; t <= tmax; ++t) {
        prefix += normalized_[t - 3];
        normalized_[t] = prefix / (2.0 * static_cast<double>(t));
    }

    log_.resize(static_cast<std::size_t>(tmax + 1));
    for (std::int64_t t = 0; t <= tmax; ++t) {
        if (t <= exact_max)
            log_[t] = log_of(exact_[t]);
        else
            log_[t] = std::log(normalized_[t]) + std::lgamma(static_cast<double>(t) + 1.0);
    }
}

const BigInt &CycleCountTable::exact(std::int64_t t) const {
    if (!has_exact(t))
        throw DomainError("no exact cycle count stored for t = " + std::to_string(t));
    return exact_[t];
}

double CycleCountTable::normalized(std::int64_t t) const {
    require_range(t, *this);
    return normalized_[t];
}

double CycleCountTable::log_count(std::int64_t t) const {
    require_range(t, *this);
    return log_[t];
}

BigRational p_cycle_exact(std::int64_t ell, std::int64_t t, const CycleCountTable &table) {
    if (ell < 3 || ell > t)
        throw DomainError("p_cycle requires 3 <= ell <= t");
    const auto &ct = table.exact(t);
    if (ct == 0)
        throw DomainError("no 2-regular graph on " + std::to_string(t) + " vertices");
    return BigRational(cycles_through(ell, t) * table.exact(t - ell), ct);
}

double p_cycle(std::int64_t ell, std::int64_t t, const CycleCountTable &table) {
    if (ell < 3 || ell > t)
        throw DomainError("p_cycle requires 3 <= ell <= t");
    require_range(t, table);
    const double ct = table.normalized(t);
    if (ct <= 0)
        throw DomainError("no 2-regular graph on " + std::to_string(t) + " vertices");
    // binom(t-1,l-1)(l-1)!/2 C_{t-l}/C_t = c_{t-l} / (2 t c_t)
    return table.normalized(t - ell) / (2.0 * static_cast<double>(t) * ct);
}

std::vector<std::vector<Vertex>> sample_2regular(std::int64_t t, std::uint64_t seed,
                                                 const CycleCountTable &table) {
    CounterRng rng(seed);
    return sample_2regular(t, rng, table);
}

std::vector<std::vector<Vertex>> sample_2regular(std::int64_t t, CounterRng &rng,
                                                 const CycleCountTable &table) {
    if (t == 1 || t == 2 || t < 0)
        throw DomainError("no 2-regular simple graph on " + std::to_string(t) + " vertices");
    require_range(t, table);

    std::vector<Vertex> remaining(static_cast<std::size_t>(t));
    std::iota(remaining.begin(), remaining.end(), 0);
    std::vector<std::vector<Vertex>> cycles;
    while (!remaining.empty()) {
        const auto r = static_cast<std::int64_t>(remaining.size());
        // Length of the cycle through the lowest remaining label.
        double u = rng.uniform();
        std::int64_t ell = r;
        for (std::int64_t len = 3; len <= r; ++len) {
            const double p = p_cycle(len, r, table);
            if (u < p) {
                ell = len;
                break;
            }
            u -= p;
        }
        // Guard against rounding leaving ell on an impossible remainder.
        while (ell < r && r - ell < 3)
            ++ell;

        for (std::int64_t i = 1; i < ell; ++i) {
            const auto j = i + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(r - i)));
            std::swap(remaining[i], remaining[j]);
        }
        cycles.emplace_back(remaining.begin(), remaining.begin() + ell);
        remaining.erase(remaining.begin(), remaining.begin() + ell);
        std::sort(remaining.begin(), remaining.end());
    }
    return cycles;
}

BigInt two_phase_count(std::int64_t s, std::int64_t t, std::int64_t mprime,
                       const CycleCountTable &table) {
    if (mprime < 1)
        throw DomainError("m' must be at least 1");
    if (s < 0 || t < 0)
        throw DomainError("s and t must be non-negative");
    BigInt binom = 1;
    for (std::int64_t k = 1; k <= t; ++k)
        binom = binom * (s + k) / k;
    BigInt paths = 1; // (s + m' - 1)! / (m' - 1)!
    for (std::int64_t k = mprime; k <= s + mprime - 1; ++k)
        paths *= k;
    return binom * paths * table.exact(t);
}

std::vector<double> q_distribution(std::int64_t n2prime, std::int64_t mprime,
                                   const CycleCountTable &table) {
    if (mprime < 1)
        throw DomainError("m' must be at least 1");
    if (n2prime < 0)
        throw DomainError("n2' must be non-negative");
    require_range(n2prime, table);

    const auto lg = [](std::int64_t x) { return std::lgamma(static_cast<double>(x) + 1.0); };
    std::vector<double> logs(static_cast<std::size_t>(n2prime + 1),
                             -std::numeric_limits<double>::infinity());
    for (std::int64_t t = 0; t <= n2prime; ++t) {
        if (t == 1 || t == 2)
            continue;
        const std::int64_t s = n2prime - t;
        logs[t] = lg(n2prime) - lg(t) - lg(s) + lg(s + mprime - 1) - lg(mprime - 1) +
                  table.log_count(t);
    }
    const double top = *std::max_element(logs.begin(), logs.end());
    std::vector<double> q(logs.size(), 0.0);
    double total = 0;
    for (std::size_t t = 0; t < logs.size(); ++t) {
        q[t] = std::exp(logs[t] - top);
        total += q[t];
    }
    for (auto &x : q)
        x /= total;
    return q;
}

std::vector<BigRational> q_distribution_exact(std::int64_t n2prime, std::int64_t mprime,
                                              const CycleCountTable &table) {
    if (n2prime > kExactQLimit)
        throw DomainError("exact q_t is limited to n2' <= " + std::to_string(kExactQLimit));
    if (n2prime < 0)
        throw DomainError("n2' must be non-negative");
    std::vector<BigInt> counts(static_cast<std::size_t>(n2prime + 1), 0);
    BigInt total = 0;
    for (std::int64_t t = 0; t <= n2prime; ++t) {
        counts[t] = two_phase_count(n2prime - t, t, mprime, table);
        total += counts[t];
    }
    std::vector<BigRational> q;
    q.reserve(counts.size());
    for (const auto &c : counts)
        q.emplace_back(c, total);
    return q;
}

BigRational longest_cycle_tail_exact(std::int64_t t, std::int64_t L, const CycleCountTable &table) {
    if (t == 1 || t == 2 || t < 0 || L < 3)
        throw DomainError("longest_cycle_tail requires t = 0 or t >= 3, and L >= 3");
    const auto &ct = table.exact(t);
    // short_only[k]: 2-regular graphs on k labeled vertices with every cycle < L
    std::vector<BigInt> short_only(static_cast<std::size_t>(t + 1), 0);
    short_only[0] = 1;
    for (std::int64_t k = 3; k <= t; ++k)
        for (std::int64_t ell = 3; ell <= std::min(L - 1, k); ++ell)
            if (short_only[k - ell] != 0)
                short_only[k] += cycles_through(ell, k) * short_only[k - ell];
    return BigRational(1) - BigRational(short_only[t], ct);
}

double longest_cycle_tail(std::int64_t t, std::int64_t L, const CycleCountTable &table) {
    if (t == 1 || t == 2 || t < 0 || L < 3)
        throw DomainError("longest_cycle_tail requires t = 0 or t >= 3, and L >= 3");
    require_range(t, table);
    // g_k = (short-cycle graphs on k vertices) / k! obeys
    // g_k = (1 / 2k) sum_{l=3..min(L-1,k)} g_{k-l}.
    std::vector<double> g(static_cast<std::size_t>(t + 1), 0.0);
    g[0] = 1.0;
    double window = 0; // sum of g_{k-l} for l in [3, L-1]
    for (std::int64_t k = 3; k <= t; ++k) {
        window += g[k - 3];
        if (k - L >= 0)
            window -= g[k - L];
        g[k] = window / (2.0 * static_cast<double>(k));
    }
    const double none_long = g[t] / table.normalized(t);
    return std::clamp(1.0 - none_long, 0.0, 1.0);
}

} // namespace degsim
