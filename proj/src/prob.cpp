#include "wordgap/prob.hpp"

#include "wordgap/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>

namespace wordgap {
namespace {

std::string big_str(const BigInt& v) { return v.str(); }

// Plan for the hot loop: letters as (0-based slot, sign) pairs.
struct EvalPlan {
    std::vector<std::pair<int, bool>> steps;  // (slot, inverted)

    explicit EvalPlan(const Word& w) {
        steps.reserve(w.length());
        for (const Letter& l : w.letters()) steps.push_back({l.var - 1, l.sign < 0});
    }

    int run(const FiniteGroup& G, const std::vector<int>& args) const {
        int acc = 0;
        for (const auto& [slot, inverted] : steps) {
            const int a = args[static_cast<std::size_t>(slot)];
            acc = G.mul(acc, inverted ? G.inv(a) : a);
        }
        return acc;
    }
};

// Enumerates tuples with the first slot restricted to [fbegin, fend) of
// `firsts` and the remaining slots over all of `values`; counts plan hits.
// Arguments are maintained incrementally as the odometer turns.
std::uint64_t count_hits(const FiniteGroup& G, const EvalPlan& plan, int d,
                         const std::vector<int>& firsts, std::uint64_t fbegin, std::uint64_t fend,
                         const std::vector<int>& values, int target,
                         const std::vector<int>* shifts) {
    std::uint64_t hits = 0;
    std::vector<int> args(static_cast<std::size_t>(d), 0);
    std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
    auto shifted = [&](int slot, int v) {
        return shifts ? G.mul(v, (*shifts)[static_cast<std::size_t>(slot)]) : v;
    };
    for (std::uint64_t f = fbegin; f < fend; ++f) {
        args[0] = shifted(0, firsts[f]);
        if (d == 1) {
            if (plan.run(G, args) == target) ++hits;
            continue;
        }
        std::fill(idx.begin(), idx.end(), 0);
        for (int k = 1; k < d; ++k) args[static_cast<std::size_t>(k)] = shifted(k, values[0]);
        while (true) {
            if (plan.run(G, args) == target) ++hits;
            int k = d - 1;
            while (k >= 1) {
                std::size_t& i = idx[static_cast<std::size_t>(k)];
                if (++i == values.size()) {
                    i = 0;
                    args[static_cast<std::size_t>(k)] = shifted(k, values[0]);
                    --k;
                } else {
                    args[static_cast<std::size_t>(k)] = shifted(k, values[i]);
                    break;
                }
            }
            if (k < 1) break;
        }
    }
    return hits;
}

std::uint64_t parallel_count(const FiniteGroup& G, const EvalPlan& plan, int d,
                             const std::vector<int>& values, int target,
                             const std::vector<int>* shifts, unsigned threads) {
    if (d == 0) return plan.run(G, {}) == target ? 1 : 0;
    std::vector<std::uint64_t> slot(threads == 0 ? 1 : threads, 0);
    parallel_chunks(values.size(), threads, [&](unsigned t, std::uint64_t b, std::uint64_t e) {
        slot[t] = count_hits(G, plan, d, values, b, e, values, target, shifts);
    });
    std::uint64_t total = 0;
    for (std::uint64_t v : slot) total += v;
    return total;
}

}  // namespace

std::pair<BigInt, BigInt> ExactProbability::reduced() const {
    if (hits == 0) return {0, 1};
    BigInt g = boost::multiprecision::gcd(hits, total);
    return {hits / g, total / g};
}

double ExactProbability::to_double() const {
    return hits.convert_to<double>() / total.convert_to<double>();
}

ExactProbability word_probability(const FiniteGroup& G, const Word& w, int target,
                                  const EnumOptions& opts) {
    if (target < 0 || target >= G.order()) throw ContractError("target element out of range");
    const int d = w.rank();
    const BigInt domain = big_pow(static_cast<std::uint64_t>(G.order()), static_cast<unsigned>(d));
    if (domain > opts.budget)
        throw BudgetError("exact enumeration of |" + G.name() + "|^" + std::to_string(d) +
                              " evaluations refused",
                          big_str(domain));
    std::vector<int> values(static_cast<std::size_t>(G.order()));
    for (int i = 0; i < G.order(); ++i) values[static_cast<std::size_t>(i)] = i;
    const EvalPlan plan(w);
    ExactProbability p;
    p.hits = parallel_count(G, plan, d, values, target, nullptr, opts.threads);
    p.total = domain;
    return p;
}

ExactProbability coset_probability(const FiniteGroup& G, const Subgroup& N, const Word& w,
                                   const std::vector<int>& reps, const EnumOptions& opts) {
    if (!is_subgroup(G, N)) throw ContractError("coset_probability: N is not a subgroup");
    if (!is_normal(G, N)) throw ContractError("coset_probability: N is not normal");
    const int d = w.rank();
    if (static_cast<int>(reps.size()) < d)
        throw ContractError("coset_probability: need " + std::to_string(d) + " representatives");
    const BigInt domain = big_pow(static_cast<std::uint64_t>(N.count), static_cast<unsigned>(d));
    if (domain > opts.budget)
        throw BudgetError("exact enumeration of |N|^" + std::to_string(d) + " evaluations refused",
                          big_str(domain));
    const std::vector<int> values = N.elements();
    std::vector<int> shifts(reps.begin(), reps.begin() + d);
    const EvalPlan plan(w);
    ExactProbability p;
    p.hits = parallel_count(G, plan, d, values, 0, &shifts, opts.threads);
    p.total = domain;
    return p;
}

ReductionCheck reduction_check(const FiniteGroup& G, const Subgroup& N, const Word& w, int g,
                               const EnumOptions& opts) {
    ReductionCheck r;
    r.in_group = word_probability(G, w, g, opts);
    QuotientGroup Q = quotient(G, N);
    r.in_quotient = word_probability(Q.group, w, Q.projection[static_cast<std::size_t>(g)], opts);
    r.holds = r.in_group.leq(r.in_quotient);
    return r;
}

bool decomposition_check(const FiniteGroup& G, const Subgroup& N, const Word& w,
                         const EnumOptions& opts) {
    const int d = w.rank();
    const BigInt domain = big_pow(static_cast<std::uint64_t>(G.order()), static_cast<unsigned>(d));
    if (domain > opts.budget)
        throw BudgetError("decomposition check needs |G|^" + std::to_string(d) + " evaluations",
                          big_str(domain));
    const ExactProbability whole = word_probability(G, w, 0, opts);

    const std::vector<int> reps = coset_reps(G, N);
    BigInt rhs = 0;
    std::vector<int> tuple(static_cast<std::size_t>(d), 0);
    std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
    if (d == 0) return whole.hits == 1;
    while (true) {
        for (int k = 0; k < d; ++k) tuple[static_cast<std::size_t>(k)] = reps[idx[static_cast<std::size_t>(k)]];
        rhs += coset_probability(G, N, w, tuple, opts).hits;
        int k = d - 1;
        while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == reps.size()) {
            idx[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return whole.hits == rhs;
}

SampleEstimate sample_probability(const FiniteGroup& G, const Word& w, int target,
                                  std::uint64_t samples, std::uint64_t seed) {
    if (samples < 1) throw ContractError("sample_probability needs samples >= 1");
    const int d = w.rank();
    Rng rng(mix64(seed));
    std::vector<int> args(static_cast<std::size_t>(d), 0);
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (int k = 0; k < d; ++k)
            args[static_cast<std::size_t>(k)] = static_cast<int>(rng.below(G.order()));
        if (evaluate(w, G, args) == target) ++hits;
    }
    SampleEstimate est;
    est.hits = hits;
    est.samples = samples;
    est.estimate = static_cast<double>(hits) / static_cast<double>(samples);
    est.radius = std::sqrt(std::log(2.0 / 0.01) / (2.0 * static_cast<double>(samples)));
    return est;
}

}  // namespace wordgap
