#include <degsim/powerlaw.hpp>

#include <array>
#include <cmath>
#include <string>

#include <degsim/errors.hpp>

namespace degsim {

namespace {

// floor() that treats values within a relative 1e-9 of an integer as that
// integer, so that e.g. exp(log(100)) / 4 lands on 25 rather than 24.
std::int64_t snapped_floor(long double x) {
    const long double r = std::nearbyint(x);
    if (std::fabs(x - r) <= 1e-9L * std::max<long double>(1.0L, std::fabs(x)))
        return static_cast<std::int64_t>(r);
    return static_cast<std::int64_t>(std::floor(x));
}

// Bernoulli numbers B_2, B_4, ..., B_16.
constexpr std::array<double, 8> kBernoulli = {1.0 / 6,        -1.0 / 30,  1.0 / 42,
                                              -1.0 / 30,      5.0 / 66,   -691.0 / 2730,
                                              7.0 / 6,        -3617.0 / 510};

double zeta_euler_maclaurin(double x, double tol) {
    // sum_{i<N} i^-x + N^(1-x)/(x-1) + N^-x/2 + sum_k B_2k/(2k)! (x)_(2k-1) N^(-x-2k+1)
    for (int N = 16; N <= (1 << 20); N *= 2) {
        double partial = 0;
        for (int i = N - 1; i >= 1; --i)
            partial += std::pow(static_cast<double>(i), -x);
        const double n = N;
        double value = partial + std::pow(n, 1 - x) / (x - 1) + 0.5 * std::pow(n, -x);
        double rising = x;          // x (x+1) ... (x+2k-2)
        double factorial = 2;       // (2k)!
        double power = std::pow(n, -x - 1);
        double last = 0;
        for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
            last = kBernoulli[k] / factorial * rising * power;
            value += last;
            rising *= (x + 2 * k + 1) * (x + 2 * k + 2);
            factorial *= (2.0 * k + 3) * (2.0 * k + 4);
            power /= n * n;
        }
        if (std::fabs(last) <= tol * 1e-2)
            return value;
    }
    throw ConvergenceFailure("zeta: Euler-Maclaurin did not reach the requested tolerance");
}

} // namespace

ACLSequence acl_sequence(const ACLParams &p, std::int64_t vertex_budget) {
    if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) || p.alpha < 0 || p.beta <= 0)
        throw DomainError("ACL parameters need finite alpha >= 0 and beta > 0");

    const long double max_real = std::exp(static_cast<long double>(p.alpha) / p.beta);
    if (max_real > static_cast<long double>(vertex_budget))
        throw Overflow("maximum degree e^(alpha/beta) exceeds the vertex budget");
    const std::int64_t max_degree = snapped_floor(max_real);
    const long double scale = std::exp(static_cast<long double>(p.alpha));

    std::map<Degree, Count> counts;
    std::int64_t n = 0;
    for (std::int64_t i = 1; i <= max_degree; ++i) {
        const std::int64_t ni = snapped_floor(scale * std::pow(static_cast<long double>(i), -p.beta));
        if (ni <= 0)
            continue;
        n += ni;
        if (n > vertex_budget)
            throw Overflow("ACL sequence exceeds the vertex budget of " +
                           std::to_string(vertex_budget));
        counts[i] = ni;
    }

    ACLSequence out;
    out.sequence = DegreeSequence::from_counts(counts);
    if (out.sequence.degree_sum() % 2 != 0) {
        ++counts[1];
        out.sequence = DegreeSequence::from_counts(counts);
        out.parity_fixed = true;
    }
    return out;
}

double zeta(double x, double tol) {
    if (!(x > 1))
        throw DomainError("zeta requires x > 1");
    if (!(tol > 0))
        throw DomainError("zeta requires a positive tolerance");

    // Plain partial sum with the integral tail when that is cheap enough.
    constexpr double kMaxTerms = 1e6;
    const double terms = std::ceil(std::pow(tol * (x - 1), -1 / (x - 1)));
    if (tol >= 1e-10 && terms <= kMaxTerms) {
        const auto N = static_cast<long>(std::max(terms, 2.0));
        double partial = 0;
        for (long i = N - 1; i >= 1; --i)
            partial += std::pow(static_cast<double>(i), -x);
        return partial + std::pow(static_cast<double>(N), 1 - x) / (x - 1);
    }
    return zeta_euler_maclaurin(x, tol);
}

double beta0(double tol) {
    if (!(tol > 0))
        throw DomainError("beta0 requires a positive tolerance");
    const double ztol = std::min(1e-12, tol * 1e-3);
    const auto f = [ztol](double b) { return zeta(b - 2, ztol) - 2 * zeta(b - 1, ztol); };

    double lo = 3.05, hi = 3.95;
    double flo = f(lo);
    const double fhi = f(hi);
    if (!(flo > 0 && fhi < 0))
        throw ConvergenceFailure("beta0 bracket does not straddle a sign change");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm > 0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace degsim
