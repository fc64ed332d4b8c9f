#include <degsim/degseq.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

#include <degsim/errors.hpp>

namespace degsim {

DegreeSequence DegreeSequence::from_counts(const std::map<Degree, Count> &counts) {
    DegreeSequence seq;
    for (const auto &[degree, mult] : counts) {
        if (degree <= 0)
            throw ValidationError("degree " + std::to_string(degree) + " is not positive");
        if (mult < 0)
            throw ValidationError("negative multiplicity for degree " + std::to_string(degree));
        if (mult == 0)
            continue;
        seq.counts_[degree] = mult;
        seq.n_ += mult;
        seq.degree_sum_ += degree * mult;
    }
    return seq;
}

DegreeSequence DegreeSequence::from_list(std::span<const Degree> degrees) {
    std::map<Degree, Count> counts;
    for (Degree d : degrees) {
        if (d <= 0)
            throw ValidationError("degree " + std::to_string(d) + " is not positive");
        ++counts[d];
    }
    return from_counts(counts);
}

Count DegreeSequence::count_of(Degree d) const {
    auto it = counts_.find(d);
    return it == counts_.end() ? 0 : it->second;
}

std::vector<Degree> DegreeSequence::to_list() const {
    std::vector<Degree> out;
    out.reserve(static_cast<std::size_t>(n_));
    for (const auto &[degree, mult] : counts_)
        out.insert(out.end(), static_cast<std::size_t>(mult), degree);
    return out;
}

std::string DegreeSequence::to_counts_text() const {
    std::ostringstream out;
    out << "#counts\n";
    for (const auto &[degree, mult] : counts_)
        out << degree << '\t' << mult << '\n';
    return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front()))
        s.remove_prefix(1);
    while (!s.empty() && is_space(s.back()))
        s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view token, std::size_t line) {
    std::int64_t value = 0;
    const char *begin = token.data();
    const char *end = token.data() + token.size();
    if (!token.empty() && *begin == '+')
        ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || begin == end)
        throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
    return value;
}

} // namespace

DegreeSequence parse_sequence(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        auto nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        auto line = trim(raw);
        if (!line.empty())
            lines.emplace_back(line_no, line);
    }
    if (lines.empty())
        throw ValidationError("degree sequence is empty");

    std::map<Degree, Count> counts;
    if (lines.front().second == "#counts") {
        for (std::size_t k = 1; k < lines.size(); ++k) {
            auto [no, line] = lines[k];
            auto sep = line.find_first_of(" \t");
            if (sep == std::string_view::npos)
                throw ParseError(no, "expected 'degree<TAB>count'");
            Degree degree = parse_int(line.substr(0, sep), no);
            Count mult = parse_int(trim(line.substr(sep + 1)), no);
            if (degree <= 0)
                throw ValidationError("line " + std::to_string(no) + ": degree " +
                                      std::to_string(degree) + " is not positive");
            if (mult < 0)
                throw ValidationError("line " + std::to_string(no) + ": negative multiplicity");
            counts[degree] += mult;
        }
    } else {
        for (auto [no, line] : lines) {
            Degree degree = parse_int(line, no);
            if (degree <= 0)
                throw ValidationError("line " + std::to_string(no) + ": degree " +
                                      std::to_string(degree) + " is not positive");
            ++counts[degree];
        }
    }
    auto seq = DegreeSequence::from_counts(counts);
    if (seq.empty())
        throw ValidationError("degree sequence is empty");
    return seq;
}

bool is_feasible(const DegreeSequence &seq) {
    if (seq.degree_sum() % 2 != 0)
        return false;
    if (seq.max_degree() >= seq.n())
        return false;

    // Erdős–Gallai only needs checking where the (descending) degree changes,
    // i.e. at the last index of each block of equal degrees.
    std::vector<std::pair<Degree, Count>> blocks(seq.counts().rbegin(), seq.counts().rend());
    __int128 lhs = 0;
    Count k = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        lhs += static_cast<__int128>(blocks[b].first) * blocks[b].second;
        k += blocks[b].second;
        __int128 rhs = static_cast<__int128>(k) * (k - 1);
        for (std::size_t c = b + 1; c < blocks.size(); ++c)
            rhs += static_cast<__int128>(std::min<Degree>(blocks[c].first, k)) * blocks[c].second;
        if (lhs > rhs)
            return false;
    }
    return true;
}

InvariantReport invariants(const DegreeSequence &seq, std::int64_t lambda_thresh) {
    InvariantReport r;
    r.n = seq.n();
    r.degree_sum = seq.degree_sum();
    r.lambda_thresh = lambda_thresh;

    std::int64_t weighted = 0; // sum d(d-2)
    for (const auto &[d, mult] : seq.counts()) {
        if (d != 2)
            r.M += d * mult;
        weighted += d * (d - 2) * mult;
    }

    // Walk ascending blocks. Terms d(d-2) are negative only for d = 1, so once
    // the prefix turns positive it stays positive.
    std::int64_t prefix = 0;
    Count before = 0; // vertices preceding the current block
    bool found = false;
    for (auto it = seq.counts().begin(); it != seq.counts().end(); ++it) {
        const auto [d, mult] = *it;
        const std::int64_t term = d * (d - 2);
        if (term > 0 && prefix + term * mult > 0) {
            // smallest k >= 1 with prefix + k * term > 0
            const Count k = prefix >= 0 ? 1 : (-prefix) / term + 1;
            r.jD = before + k;
            r.R = d * (mult - k + 1);
            for (auto rest = std::next(it); rest != seq.counts().end(); ++rest)
                r.R += rest->first * rest->second;
            found = true;
            break;
        }
        prefix += term * mult;
        before += mult;
    }
    if (!found) {
        r.jD = seq.n();
        r.R = seq.max_degree();
    }

    if (r.degree_sum > 0)
        r.ratio_hat = Rational(weighted, r.degree_sum);
    if (r.n > 0)
        r.q_hat = Rational(weighted, r.n);
    r.well_behaved = r.M >= lambda_thresh;
    return r;
}

nlohmann::json to_json(const InvariantReport &r) {
    const auto rational = [](const Rational &q) {
        return nlohmann::json{{"num", q.numerator()},
                              {"den", q.denominator()},
                              {"value", boost::rational_cast<double>(q)}};
    };
    return nlohmann::json{{"n", r.n},
                          {"degree_sum", r.degree_sum},
                          {"M", r.M},
                          {"R", r.R},
                          {"jD", r.jD},
                          {"ratio_hat", rational(r.ratio_hat)},
                          {"q_hat", rational(r.q_hat)},
                          {"well_behaved", r.well_behaved}};
}

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::GiantWHP:
        return "GiantWHP";
    case Verdict::NoGiantWHP:
        return "NoGiantWHP";
    case Verdict::NotWellBehaved:
        return "NotWellBehaved";
    case Verdict::Indeterminate:
        return "Indeterminate";
    }
    return "Indeterminate";
}

Classification classify(const DegreeSequence &seq, double eps, double delta,
                        std::int64_t lambda_thresh) {
    if (!(delta > 0 && delta < eps && eps <= 1))
        throw PreconditionViolated("classify requires 0 < delta < eps <= 1");
    if (!is_feasible(seq))
        throw InfeasibleSequence("degree sequence is not graphical");

    Classification c;
    c.epsilon_used = eps;
    c.delta_used = delta;
    c.lambda_thresh = lambda_thresh;
    c.report = invariants(seq, lambda_thresh);

    const auto R = static_cast<long double>(c.report.R);
    const auto M = static_cast<long double>(c.report.M);
    if (!c.report.well_behaved)
        c.verdict = Verdict::NotWellBehaved;
    else if (R >= static_cast<long double>(eps) * M)
        c.verdict = Verdict::GiantWHP;
    else if (R <= static_cast<long double>(delta) * M)
        c.verdict = Verdict::NoGiantWHP;
    else
        c.verdict = Verdict::Indeterminate;
    return c;
}

Claim0Check check_claim0(std::span<const std::int64_t> a, std::int64_t ell) {
    if (ell < 0)
        throw ValidationError("ell must be non-negative");
    std::int64_t sum = 0;
    Claim0Check out;
    for (auto ai : a) {
        if (ai < 1 || ai == 2)
            throw ValidationError("entries must be positive and different from 2");
        sum += ai;
        out.lhs += ai * (ai - 2);
    }
    const auto j = static_cast<std::int64_t>(a.size());
    if (sum < 2 * j - ell)
        throw PreconditionViolated("sum of entries is below 2j - ell");
    out.rhs = j - 2 * ell;
    out.holds = out.lhs >= out.rhs;
    return out;
}

RLowerBound r_lower_bound_check(const DegreeSequence &seq) {
    const auto report = invariants(seq);
    const Count non_two = seq.n() - seq.count_of(2);
    RLowerBound out;
    out.R = report.R;
    out.bound = report.M - 2 * non_two;
    out.holds = out.R >= out.bound;
    return out;
}

} // namespace degsim
