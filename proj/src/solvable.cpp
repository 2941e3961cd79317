#include "wordgap/solvable.hpp"

#include "wordgap/errors.hpp"
#include "wordgap/util.hpp"

#include <json.hpp>

#include <algorithm>
#include <unordered_map>

namespace wordgap {
namespace {

// Coordinates on the elementary abelian V over F_p.
struct Chart {
    int p = 0, dim = 0;
    std::vector<int> basis;
    std::unordered_map<int, std::vector<std::uint8_t>> coords;

    const std::vector<std::uint8_t>& of(int v) const {
        auto it = coords.find(v);
        if (it == coords.end()) throw InternalCheckError("element outside the charted subgroup");
        return it->second;
    }
};

Chart build_chart(const FiniteGroup& G, const Subgroup& V, int p, int dim) {
    Chart chart;
    chart.p = p;
    chart.dim = dim;
    Subgroup span = G.trivial();
    for (int v : V.elements()) {
        if (v == 0 || span.contains(v)) continue;
        chart.basis.push_back(v);
        span = subgroup_generated(G, chart.basis);
        if (static_cast<int>(chart.basis.size()) == dim) break;
    }
    if (static_cast<int>(chart.basis.size()) != dim)
        throw InternalCheckError("could not find a basis of the verbal subgroup");

    std::vector<std::uint8_t> digits(static_cast<std::size_t>(dim), 0);
    while (true) {
        int elem = 0;
        for (int k = 0; k < dim; ++k)
            for (int rep = 0; rep < digits[static_cast<std::size_t>(k)]; ++rep)
                elem = G.mul(elem, chart.basis[static_cast<std::size_t>(k)]);
        if (!chart.coords.emplace(elem, digits).second)
            throw InternalCheckError("verbal subgroup is not elementary abelian of the stated rank");
        int k = dim - 1;
        while (k >= 0 && ++digits[static_cast<std::size_t>(k)] == p) {
            digits[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
    if (chart.coords.size() != static_cast<std::size_t>(V.count))
        throw InternalCheckError("chart does not cover the verbal subgroup");
    return chart;
}

// w(r_1,..,a*r_i,..,r_d) * w(r)^-1.
int slot_difference(const FiniteGroup& G, const Word& w, const std::vector<int>& reps_tuple,
                    int base, int slot, int a) {
    std::vector<int> args = reps_tuple;
    args[static_cast<std::size_t>(slot)] = G.mul(a, args[static_cast<std::size_t>(slot)]);
    return G.mul(evaluate(w, G, args), G.inv(base));
}

// All slot operators vanish on V; tests basis vectors only (linearity is
// verified separately through derive_operators).
bool operators_vanish(const FiniteGroup& G, const Word& w, const Chart& chart,
                      const std::vector<int>& reps_tuple, int base) {
    const int d = w.rank();
    for (int i = 0; i < d; ++i)
        for (int b : chart.basis)
            if (slot_difference(G, w, reps_tuple, base, i, b) != 0) return false;
    return true;
}

CheckedBound make_bound(std::string name, BigInt ln, BigInt ld, BigInt rn, BigInt rd,
                        bool equality = false) {
    CheckedBound c;
    c.name = std::move(name);
    c.holds = equality ? ln * rd == rn * ld : ln * rd <= rn * ld;
    c.lhs_num = std::move(ln);
    c.lhs_den = std::move(ld);
    c.rhs_num = std::move(rn);
    c.rhs_den = std::move(rd);
    c.equality = equality;
    return c;
}

CheckedBound make_flag(std::string name, bool holds) {
    CheckedBound c;
    c.name = std::move(name);
    c.holds = holds;
    c.equality = true;
    c.lhs_num = holds ? 1 : 0;
    c.rhs_num = 1;
    return c;
}

std::uint64_t commuting_pairs(const FiniteGroup& G) {
    std::uint64_t pairs = 0;
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            if (G.mul(a, b) == G.mul(b, a)) ++pairs;
    return pairs;
}

bool is_power_of(int value, int p) {
    while (value % p == 0) value /= p;
    return value == 1;
}

const Word& engel_word() {
    static const Word w = Word::parse("engel2");
    return w;
}

const Word& metab_word() {
    static const Word w = Word::parse("metab");
    return w;
}

}  // namespace

// ---------------------------------------------------------------- verbal

Subgroup verbal_subgroup(const FiniteGroup& G, const Word& w, std::uint64_t budget) {
    if (w == Word::parse("comm")) return derived_subgroup(G);
    if (w == metab_word()) {
        Subgroup d1 = derived_subgroup(G);
        return commutator_subgroup(G, d1, d1);
    }
    for (int d = 2; d <= 5; ++d)
        if (w == Word::parse("gamma:" + std::to_string(d)) ||
            w == Word::parse("gammaR:" + std::to_string(d))) {
            std::vector<Subgroup> lcs = lower_central_series(G);
            const std::size_t idx =
                std::min<std::size_t>(static_cast<std::size_t>(d) - 1, lcs.size() - 1);
            return lcs[idx];
        }

    const int d = w.rank();
    if (d == 0) return G.trivial();
    const BigInt domain = big_pow(static_cast<std::uint64_t>(G.order()), static_cast<unsigned>(d));
    if (domain > budget)
        throw BudgetError("verbal subgroup of " + w.str() + " on " + G.name(), domain.str());
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(G.order()), 0);
    std::vector<int> values;
    std::vector<int> args(static_cast<std::size_t>(d), 0);
    while (true) {
        const int v = evaluate(w, G, args);
        if (!seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = 1;
            values.push_back(v);
        }
        int k = d - 1;
        while (k >= 0 && ++args[static_cast<std::size_t>(k)] == G.order()) {
            args[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
    Subgroup V = subgroup_generated(G, values);
    if (!is_normal(G, V)) throw InternalCheckError("verbal subgroup is not normal");
    return V;
}

bool word_is_identity(const FiniteGroup& G, const Word& w, std::uint64_t budget) {
    return verbal_subgroup(G, w, budget).count == 1;
}

VerbalContext reduce_to_minimal_verbal(const FiniteGroup& G, const Word& w) {
    if (!is_solvable(G)) throw ContractError("reduce_to_minimal_verbal needs a solvable group");
    if (word_is_identity(G, w))
        throw ContractError("the word " + w.str() + " is an identity in " + G.name());

    VerbalContext ctx;
    ctx.word = w;
    ctx.group = G;
    ctx.projection.resize(static_cast<std::size_t>(G.order()));
    for (int g = 0; g < G.order(); ++g) ctx.projection[static_cast<std::size_t>(g)] = g;

    while (true) {
        std::vector<Subgroup> mins = minimal_normal_subgroups(ctx.group);
        bool reduced = false;
        for (const Subgroup& N : mins) {  // ordered by (size, canonical mask)
            QuotientGroup Q = quotient(ctx.group, N);
            if (word_is_identity(Q.group, w)) continue;
            for (int g = 0; g < G.order(); ++g)
                ctx.projection[static_cast<std::size_t>(g)] = Q.projection[static_cast<std::size_t>(
                    ctx.projection[static_cast<std::size_t>(g)])];
            ctx.reduction_trail.push_back("quotient by a minimal normal subgroup of order " +
                                          std::to_string(N.count) + " -> order " +
                                          std::to_string(Q.group.order()));
            ctx.group = std::move(Q.group);
            reduced = true;
            break;
        }
        if (!reduced) break;
    }

    ctx.verbal = verbal_subgroup(ctx.group, w);
    std::vector<Subgroup> mins = minimal_normal_subgroups(ctx.group);
    if (mins.size() != 1 || !(mins[0] == ctx.verbal))
        throw InternalCheckError("reduction did not make w(G) the unique minimal normal subgroup");

    int p = 0;
    for (int v : ctx.verbal.elements())
        if (v != 0) {
            p = ctx.group.element_order(v);
            break;
        }
    int dim = 0, size = 1;
    while (size < ctx.verbal.count) {
        size *= p;
        ++dim;
    }
    if (size != ctx.verbal.count)
        throw InternalCheckError("verbal subgroup size is not a power of its exponent");
    ctx.p = p;
    ctx.dim = dim;

    ctx.reps = coset_reps(ctx.group, ctx.verbal);
    ctx.rep_of.assign(static_cast<std::size_t>(ctx.group.order()), -1);
    for (int r : ctx.reps)
        for (int v : ctx.verbal.elements())
            ctx.rep_of[static_cast<std::size_t>(ctx.group.mul(v, r))] = r;
    ctx.trivial_action = centralizer(ctx.group, ctx.verbal).count == ctx.group.order();
    return ctx;
}

// ---------------------------------------------------------------- operators

bool ExponentOperators::zero(std::size_t i) const {
    for (std::uint8_t v : mats[i])
        if (v) return false;
    return true;
}

bool ExponentOperators::all_zero() const {
    for (std::size_t i = 0; i < mats.size(); ++i)
        if (!zero(i)) return false;
    return true;
}

ExponentOperators derive_operators(const VerbalContext& ctx, const std::vector<int>& rep_tuple) {
    const FiniteGroup& G = ctx.group;
    const Word& w = ctx.word;
    const int d = w.rank();
    if (static_cast<int>(rep_tuple.size()) != d)
        throw ContractError("derive_operators: tuple size must equal the word rank");

    Chart chart = build_chart(G, ctx.verbal, ctx.p, ctx.dim);
    ExponentOperators ops;
    ops.p = ctx.p;
    ops.dim = ctx.dim;
    ops.base_value = evaluate(w, G, rep_tuple);
    ops.mats.assign(static_cast<std::size_t>(d),
                    std::vector<std::uint8_t>(static_cast<std::size_t>(ctx.dim * ctx.dim), 0));

    auto apply_mat = [&](const std::vector<std::uint8_t>& m, const std::vector<std::uint8_t>& x) {
        std::vector<std::uint8_t> out(static_cast<std::size_t>(ctx.dim), 0);
        for (int row = 0; row < ctx.dim; ++row) {
            int acc = 0;
            for (int col = 0; col < ctx.dim; ++col)
                acc +=
                    m[static_cast<std::size_t>(row * ctx.dim + col)] * x[static_cast<std::size_t>(col)];
            out[static_cast<std::size_t>(row)] = static_cast<std::uint8_t>(acc % ctx.p);
        }
        return out;
    };
    auto element_of = [&](const std::vector<std::uint8_t>& digits) {
        int elem = 0;
        for (int k = 0; k < ctx.dim; ++k)
            for (int rep = 0; rep < digits[static_cast<std::size_t>(k)]; ++rep)
                elem = G.mul(elem, chart.basis[static_cast<std::size_t>(k)]);
        return elem;
    };

    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < ctx.dim; ++k) {
            const int diff = slot_difference(G, w, rep_tuple, ops.base_value, i,
                                             chart.basis[static_cast<std::size_t>(k)]);
            if (!ctx.verbal.contains(diff))
                throw InternalCheckError("slot difference escaped the verbal subgroup");
            const std::vector<std::uint8_t>& col = chart.of(diff);
            for (int row = 0; row < ctx.dim; ++row)
                ops.mats[static_cast<std::size_t>(i)][static_cast<std::size_t>(row * ctx.dim + k)] =
                    col[static_cast<std::size_t>(row)];
        }
        // Linearity on all of V.
        for (int v : ctx.verbal.elements()) {
            const int direct = slot_difference(G, w, rep_tuple, ops.base_value, i, v);
            if (direct != element_of(apply_mat(ops.mats[static_cast<std::size_t>(i)], chart.of(v))))
                throw InternalCheckError("slot operator is not linear on V");
        }
    }

    // The product expansion on random V-tuples.
    Rng rng(0xD15C0);
    const std::vector<int> velems = ctx.verbal.elements();
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<int> args(static_cast<std::size_t>(d), 0);
        int rhs = 0;
        for (int i = 0; i < d; ++i) {
            const int a = velems[static_cast<std::size_t>(rng.below(velems.size()))];
            args[static_cast<std::size_t>(i)] =
                G.mul(a, rep_tuple[static_cast<std::size_t>(i)]);
            rhs = G.mul(rhs, slot_difference(G, w, rep_tuple, ops.base_value, i, a));
        }
        rhs = G.mul(rhs, ops.base_value);
        if (evaluate(w, G, args) != rhs)
            throw InternalCheckError("the product expansion of w over V failed");
    }
    return ops;
}

// ---------------------------------------------------------------- reports

bool BadnessReport::all_hold() const {
    for (const CheckedBound& c : checks)
        if (!c.holds) return false;
    return true;
}

const CheckedBound* BadnessReport::find(const std::string& name) const {
    for (const CheckedBound& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string BadnessReport::to_json() const {
    nlohmann::json j;
    j["branch"] = branch;
    j["space"] = space.str();
    j["bad"] = bad.str();
    j["good"] = good.str();
    if (ugly) j["ugly"] = ugly->str();
    if (bad_prime) j["bad_prime"] = bad_prime->str();
    if (ugly_prime) j["ugly_prime"] = ugly_prime->str();
    j["attained"] = {{"hits", attained.hits.str()},
                     {"total", attained.total.str()},
                     {"float", attained.to_double()}};
    j["all_hold"] = all_hold();
    j["checks"] = nlohmann::json::array();
    for (const CheckedBound& c : checks)
        j["checks"].push_back({{"name", c.name},
                               {"lhs", c.lhs_num.str() + "/" + c.lhs_den.str()},
                               {"relation", c.equality ? "==" : "<="},
                               {"rhs", c.rhs_num.str() + "/" + c.rhs_den.str()},
                               {"holds", c.holds}});
    return j.dump(2);
}

BadnessReport badness_report(const VerbalContext& ctx, const EnumOptions& opts) {
    const FiniteGroup& G = ctx.group;
    const Word& w = ctx.word;
    const int d = w.rank();
    const std::vector<int>& R = ctx.reps;
    const BigInt space = big_pow(R.size(), static_cast<unsigned>(d));
    if (space > opts.budget)
        throw BudgetError("operator scan over |R|^" + std::to_string(d), space.str());

    Chart chart = build_chart(G, ctx.verbal, ctx.p, ctx.dim);
    // Exercise the verified extraction once; it throws on any inconsistency.
    derive_operators(ctx, std::vector<int>(static_cast<std::size_t>(d), R[R.size() / 2]));

    const unsigned nthreads = opts.threads ? opts.threads : 1;
    std::vector<std::uint64_t> slot_bad(nthreads, 0);
    parallel_chunks(R.size(), nthreads, [&](unsigned t, std::uint64_t lo, std::uint64_t hi) {
        std::vector<int> tuple(static_cast<std::size_t>(d), R[0]);
        std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
        for (std::uint64_t first = lo; first < hi; ++first) {
            tuple[0] = R[first];
            std::fill(idx.begin(), idx.end(), 0);
            for (int k = 1; k < d; ++k) tuple[static_cast<std::size_t>(k)] = R[0];
            while (true) {
                const int base = evaluate(w, G, tuple);
                if (operators_vanish(G, w, chart, tuple, base)) ++slot_bad[t];
                if (d == 1) break;
                int k = d - 1;
                while (k >= 1) {
                    std::size_t& i = idx[static_cast<std::size_t>(k)];
                    if (++i == R.size()) {
                        i = 0;
                        tuple[static_cast<std::size_t>(k)] = R[0];
                        --k;
                    } else {
                        tuple[static_cast<std::size_t>(k)] = R[i];
                        break;
                    }
                }
                if (k < 1) break;
            }
        }
    });

    BadnessReport rep;
    rep.branch = "operator-count";
    rep.space = space;
    for (std::uint64_t v : slot_bad) rep.bad += v;
    rep.good = space - rep.bad;
    rep.attained = word_probability(G, w, 0, opts);
    rep.checks.push_back(
        make_bound("bad-plus-good-eq-space", rep.bad + rep.good, 1, space, 1, true));
    rep.checks.push_back(make_bound("prob-le-half-one-plus-bad-ratio", rep.attained.hits * 2 * space,
                                    rep.attained.total, space + rep.bad, 1));
    rep.checks.push_back(make_bound("prob-le-p-form", rep.attained.hits * ctx.p * space,
                                    rep.attained.total, space + (ctx.p - 1) * rep.bad, 1));
    return rep;
}

PhiMap engel_phi(const FiniteGroup& G, int y) {
    PhiMap phi;
    phi.y = y;
    phi.image.resize(static_cast<std::size_t>(G.order()));
    for (int a = 0; a < G.order(); ++a)
        phi.image[static_cast<std::size_t>(a)] = G.comm(G.comm(a, y), y);
    if (G.order() <= 256) {
        // phi_y(ab) = phi_y(a) phi_y(b) [a,y,b,y].
        for (int a = 0; a < G.order(); ++a)
            for (int b = 0; b < G.order(); ++b) {
                const int correction = G.comm(G.comm(G.comm(a, y), b), y);
                const int rhs = G.mul(G.mul(phi.image[static_cast<std::size_t>(a)],
                                            phi.image[static_cast<std::size_t>(b)]),
                                      correction);
                if (phi.image[static_cast<std::size_t>(G.mul(a, b))] != rhs)
                    throw InternalCheckError("engel phi expansion law failed in " + G.name());
            }
        phi.expansion_law_checked = true;
    }
    return phi;
}

std::vector<int> metab_phi(const FiniteGroup& G, int y, int z, int t) {
    std::vector<int> image(static_cast<std::size_t>(G.order()));
    const int c = G.comm(z, t);
    for (int a = 0; a < G.order(); ++a)
        image[static_cast<std::size_t>(a)] = G.comm(G.comm(a, y), c);
    return image;
}

FiberVerdict fiber_bound_check(const FiniteGroup& G, const std::vector<int>& phi,
                               const Subgroup& H) {
    bool nontrivial_on_H = false;
    for (int h : H.elements()) {
        if (phi[static_cast<std::size_t>(h)] != 0) nontrivial_on_H = true;
        for (int g = 0; g < G.order(); ++g)
            if (phi[static_cast<std::size_t>(G.mul(g, h))] !=
                G.mul(phi[static_cast<std::size_t>(g)], phi[static_cast<std::size_t>(h)]))
                return FiberVerdict::HypothesisViolated;
    }
    if (!nontrivial_on_H) return FiberVerdict::HypothesisViolated;
    int fiber = 0;
    for (int g = 0; g < G.order(); ++g)
        if (phi[static_cast<std::size_t>(g)] == 0) ++fiber;
    return 2 * fiber <= G.order() ? FiberVerdict::BoundHolds : FiberVerdict::BoundViolated;
}

// ------------------------------------------------------------ engel badness

BadnessReport engel_badness(const VerbalContext& ctx, const EnumOptions& opts) {
    if (!(ctx.word == engel_word()))
        throw ContractError("engel_badness needs the 2-Engel context");
    const FiniteGroup& G = ctx.group;
    const int n = G.order();
    const int p = ctx.p;
    const Subgroup C = centralizer(G, ctx.verbal);

    BadnessReport rep;
    rep.attained = word_probability(G, ctx.word, 0, opts);

    if (C.count < n) {
        // Nontrivial action of G on V.
        rep.branch = "engel-nontrivial-action";
        const std::vector<int>& R = ctx.reps;
        const std::size_t r = R.size();
        rep.space = BigInt(r) * r;
        Chart chart = build_chart(G, ctx.verbal, ctx.p, ctx.dim);

        std::vector<std::pair<int, int>> bad_pairs;
        for (int x : R)
            for (int y : R) {
                const std::vector<int> tuple = {x, y};
                if (operators_vanish(G, ctx.word, chart, tuple, evaluate(ctx.word, G, tuple)))
                    bad_pairs.push_back({x, y});
            }
        rep.bad = bad_pairs.size();
        rep.good = rep.space - rep.bad;

        // BAD sits inside R x {y : y^p in C_G(V)}.
        std::vector<std::uint8_t> quad(static_cast<std::size_t>(n), 0);
        std::uint64_t strip = 0;
        for (int y : R)
            if (C.contains(G.pow(y, p))) {
                quad[static_cast<std::size_t>(y)] = 1;
                ++strip;
            }
        bool included = true;
        for (const auto& [x, y] : bad_pairs) included = included && quad[static_cast<std::size_t>(y)];
        rep.checks.push_back(make_flag("bad-included-in-quadratic-strip", included));

        QuotientGroup Q = quotient(G, C);
        rep.checks.push_back(
            make_flag("G-mod-C-satisfies-engel2", word_is_identity(Q.group, ctx.word)));
        rep.checks.push_back(make_flag("G-mod-C-nilpotent", is_nilpotent(Q.group)));
        rep.checks.push_back(make_flag("G-mod-C-not-p-group", !is_power_of(Q.group.order(), p)));

        const Subgroup Pbar = sylow_of_nilpotent(Q.group, p);
        bool strip_in_sylow = true;
        for (int y : R)
            if (quad[static_cast<std::size_t>(y)] &&
                !Pbar.contains(Q.projection[static_cast<std::size_t>(y)]))
                strip_in_sylow = false;
        rep.checks.push_back(make_flag("quadratic-strip-inside-sylow", strip_in_sylow));

        const BigInt P_order = BigInt(Pbar.count) * C.count;  // preimage of the Sylow p-subgroup
        rep.checks.push_back(make_bound("sylow-index-ge-2", 2 * P_order, 1, n, 1));
        rep.checks.push_back(
            make_bound("bad-ratio-le-sylow-index", rep.bad, rep.space, P_order, n));
        rep.checks.push_back(make_bound("prob-le-half-one-plus-bad-ratio",
                                        rep.attained.hits * 2 * rep.space, rep.attained.total,
                                        rep.space + rep.bad, 1));
        return rep;
    }

    // Central V: G is a p-group and V has order p.
    rep.space = n;
    rep.checks.push_back(make_flag("group-is-p-group", is_power_of(n, p)));
    rep.checks.push_back(make_flag("verbal-is-central-of-order-p", ctx.verbal.count == p && ctx.dim == 1));

    std::vector<PhiMap> phis;
    phis.reserve(static_cast<std::size_t>(n));
    for (int y = 0; y < n; ++y) phis.push_back(engel_phi(G, y));

    std::vector<std::uint8_t> in_bad(static_cast<std::size_t>(n), 0);
    BigInt bad = 0;
    std::vector<int> fibers(static_cast<std::size_t>(n), 0);
    for (int y = 0; y < n; ++y) {
        bool trivial = true;
        int fiber = 0;
        for (int a = 0; a < n; ++a) {
            if (phis[static_cast<std::size_t>(y)].image[static_cast<std::size_t>(a)] == 0)
                ++fiber;
            else
                trivial = false;
        }
        fibers[static_cast<std::size_t>(y)] = fiber;
        if (trivial) {
            in_bad[static_cast<std::size_t>(y)] = 1;
            ++bad;
        }
    }
    rep.bad = bad;
    rep.good = rep.space - rep.bad;

    // [G,y,G,y] = 1 for all y?
    bool nice = true;
    for (int y = 0; y < n && nice; ++y) {
        std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> level1;
        for (int a = 0; a < n; ++a) {
            const int c = G.comm(a, y);
            if (!seen[static_cast<std::size_t>(c)]) {
                seen[static_cast<std::size_t>(c)] = 1;
                level1.push_back(c);
            }
        }
        for (int c1 : level1)
            for (int b = 0; b < n && nice; ++b)
                nice = G.comm(G.comm(c1, b), y) == 0;
    }

    const Subgroup Gp = derived_subgroup(G);
    if (p == 3) {
        bool engel_on_derived = true;
        for (int y = 0; y < n && engel_on_derived; ++y)
            for (int h : Gp.elements())
                if (phis[static_cast<std::size_t>(y)].image[static_cast<std::size_t>(h)] != 0) {
                    engel_on_derived = false;
                    break;
                }
        rep.checks.push_back(make_flag("claim-equivalence", nice == engel_on_derived));
        if (nice) {
            const std::vector<Subgroup> lcs = lower_central_series(G);
            const Subgroup& gamma3 = lcs[std::min<std::size_t>(2, lcs.size() - 1)];
            rep.checks.push_back(make_flag("claim-gamma3-le-V", subgroup_leq(gamma3, ctx.verbal)));
        }
    }

    BigInt bound_for_prob;
    if (nice) {
        rep.branch = "engel-central-homomorphism";
        if (p == 2)
            rep.checks.push_back(make_bound("bad-le-half-order", rep.bad, 1, BigInt(n), 2));
        else
            rep.checks.push_back(make_bound("bad-le-two-thirds-order", rep.bad, 1, BigInt(2) * n, 3));
        bool good_fibers = true;
        for (int y = 0; y < n; ++y)
            if (!in_bad[static_cast<std::size_t>(y)])
                good_fibers = good_fibers &&
                              fiber_bound_check(G, phis[static_cast<std::size_t>(y)].image,
                                                G.whole()) == FiberVerdict::BoundHolds;
        rep.checks.push_back(make_flag("good-fibers-le-half", good_fibers));
        bound_for_prob = rep.bad;
    } else {
        rep.branch = "engel-central-restricted";
        rep.checks.push_back(make_flag("restricted-case-only-p3", p == 3));
        BigInt bad_prime = 0;
        std::vector<std::uint8_t> in_bad_prime(static_cast<std::size_t>(n), 0);
        for (int y = 0; y < n; ++y) {
            bool trivial_on_derived = true;
            for (int h : Gp.elements())
                if (phis[static_cast<std::size_t>(y)].image[static_cast<std::size_t>(h)] != 0) {
                    trivial_on_derived = false;
                    break;
                }
            if (trivial_on_derived) {
                in_bad_prime[static_cast<std::size_t>(y)] = 1;
                ++bad_prime;
            }
        }
        rep.bad_prime = bad_prime;
        rep.checks.push_back(
            make_bound("bad-prime-le-two-thirds-order", bad_prime, 1, BigInt(2) * n, 3));
        bool restricted_hom = true, good_fibers = true;
        for (int y = 0; y < n; ++y) {
            if (in_bad_prime[static_cast<std::size_t>(y)]) continue;
            const std::vector<int>& img = phis[static_cast<std::size_t>(y)].image;
            for (int g = 0; g < n && restricted_hom; ++g)
                for (int h : Gp.elements())
                    if (img[static_cast<std::size_t>(G.mul(g, h))] !=
                        G.mul(img[static_cast<std::size_t>(g)], img[static_cast<std::size_t>(h)])) {
                        restricted_hom = false;
                        break;
                    }
            good_fibers =
                good_fibers && fiber_bound_check(G, img, Gp) == FiberVerdict::BoundHolds;
        }
        rep.checks.push_back(make_flag("restricted-homomorphism-on-derived", restricted_hom));
        rep.checks.push_back(make_flag("good-fibers-le-half", good_fibers));
        bound_for_prob = bad_prime;
    }

    BigInt fiber_sum = 0;
    for (int y = 0; y < n; ++y) fiber_sum += fibers[static_cast<std::size_t>(y)];
    rep.checks.push_back(make_bound("probability-assembly", rep.attained.hits, 1, fiber_sum, 1, true));
    rep.checks.push_back(make_bound("prob-le-half-one-plus-bad-ratio",
                                    rep.attained.hits * 2 * n, rep.attained.total,
                                    BigInt(n) + bound_for_prob, 1));
    return rep;
}

// ------------------------------------------------------------ metab badness

BadnessReport metab_badness(const VerbalContext& ctx, const EnumOptions& opts) {
    if (!(ctx.word == metab_word()))
        throw ContractError("metab_badness needs the metabelian context");
    const FiniteGroup& G = ctx.group;
    const int n = G.order();
    const Subgroup C = centralizer(G, ctx.verbal);
    const Subgroup Gp = derived_subgroup(G);

    BadnessReport rep;
    rep.attained = word_probability(G, ctx.word, 0, opts);

    if (!subgroup_leq(Gp, C)) {
        // Nontrivial action of G' on V.
        rep.branch = "metab-nontrivial-action";
        const std::vector<int>& R = ctx.reps;
        const std::size_t r = R.size();
        rep.space = big_pow(r, 4);
        if (rep.space > opts.budget)
            throw BudgetError("metab operator scan over |R|^4", rep.space.str());
        Chart chart = build_chart(G, ctx.verbal, ctx.p, ctx.dim);
        derive_operators(ctx, {R[0], R[r / 2], R[r - 1], R[r / 3]});

        std::vector<int> rep_pos(static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < r; ++i) rep_pos[static_cast<std::size_t>(R[i])] = static_cast<int>(i);

        // UGLY pairs and the commuting-probability identity.
        std::uint64_t ugly = 0;
        for (int z : R)
            for (int t : R)
                if (C.contains(G.comm(z, t))) ++ugly;
        rep.ugly = ugly;
        QuotientGroup Q = quotient(G, C);
        rep.checks.push_back(make_flag("G-mod-C-nonabelian", !Q.group.is_abelian()));
        rep.checks.push_back(make_bound(
            "ugly-matches-commuting-probability", BigInt(ugly),
            BigInt(r) * r, commuting_pairs(Q.group), BigInt(Q.group.order()) * Q.group.order(),
            true));
        rep.checks.push_back(make_bound("ugly-le-5/8", BigInt(ugly) * 8, 1, BigInt(r) * r * 5, 1));

        // Y_c = {y in G/V : [V, y, c] = 1} for the non-central commutator values.
        std::unordered_map<int, std::vector<std::uint8_t>> Y;
        const std::vector<int> velems = ctx.verbal.elements();
        auto y_condition = [&](int y, int c) {
            for (int v : velems)
                if (G.comm(G.comm(v, y), c) != 0) return false;
            return true;
        };
        bool y_well_defined = true, y_closed = true, y_proper = true;
        for (int z : R)
            for (int t : R) {
                const int c = G.comm(z, t);
                if (C.contains(c) || Y.count(c)) continue;
                std::vector<std::uint8_t> mask(r, 0);
                std::size_t members = 0;
                for (std::size_t i = 0; i < r; ++i) {
                    mask[i] = y_condition(R[i], c) ? 1 : 0;
                    members += mask[i];
                    for (int v : velems)
                        if (y_condition(G.mul(v, R[i]), c) != static_cast<bool>(mask[i]))
                            y_well_defined = false;
                }
                for (std::size_t i = 0; i < r && y_closed; ++i)
                    for (std::size_t k = 0; k < r; ++k) {
                        if (!mask[i] || !mask[k]) continue;
                        const int prod_rep = ctx.rep_of[static_cast<std::size_t>(G.mul(R[i], R[k]))];
                        if (!mask[static_cast<std::size_t>(rep_pos[static_cast<std::size_t>(prod_rep)])]) {
                            y_closed = false;
                            break;
                        }
                    }
                if (members >= r) y_proper = false;
                Y.emplace(c, std::move(mask));
            }
        rep.checks.push_back(make_flag("Y-well-defined-on-cosets", y_well_defined));
        rep.checks.push_back(make_flag("Y-subgroup-closure", y_closed));
        rep.checks.push_back(make_flag("Y-proper-for-noncentral-commutators", y_proper));

        // BAD over R^4 with the inclusion check.
        const unsigned nthreads = opts.threads ? opts.threads : 1;
        std::vector<std::uint64_t> slot_bad(nthreads, 0);
        std::vector<std::uint8_t> slot_included(nthreads, 1);
        parallel_chunks(r, nthreads, [&](unsigned th, std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t xi = lo; xi < hi; ++xi)
                for (std::size_t yi = 0; yi < r; ++yi)
                    for (std::size_t zi = 0; zi < r; ++zi)
                        for (std::size_t ti = 0; ti < r; ++ti) {
                            const std::vector<int> tuple = {R[xi], R[yi], R[zi], R[ti]};
                            const int base = evaluate(ctx.word, G, tuple);
                            if (!operators_vanish(G, ctx.word, chart, tuple, base)) continue;
                            ++slot_bad[th];
                            const int c = G.comm(R[zi], R[ti]);
                            if (!C.contains(c) && !Y.at(c)[yi]) slot_included[th] = 0;
                        }
        });
        for (std::uint64_t v : slot_bad) rep.bad += v;
        rep.good = rep.space - rep.bad;
        bool included = true;
        for (std::uint8_t v : slot_included) included = included && v;
        rep.checks.push_back(make_flag("bad-included-in-Y-union", included));
        rep.checks.push_back(make_bound("bad-ratio-le-half-plus-half-ugly", rep.bad, rep.space,
                                        BigInt(r) * r + ugly, BigInt(2) * r * r));
        rep.checks.push_back(make_bound("prob-le-half-one-plus-bad-ratio",
                                        rep.attained.hits * 2 * rep.space, rep.attained.total,
                                        rep.space + rep.bad, 1));
        return rep;
    }

    // Trivial action of G' on V; the analysis runs over G itself.
    rep.branch = "metab-trivial-action";
    rep.space = big_pow(static_cast<std::uint64_t>(n), 3);
    rep.checks.push_back(
        make_flag("V-eq-second-derived", ctx.verbal == commutator_subgroup(G, Gp, Gp)));
    rep.checks.push_back(make_flag(
        "Gprime-class-le-2",
        commutator_subgroup(G, commutator_subgroup(G, Gp, Gp), Gp).count == 1));
    rep.checks.push_back(make_flag("Gprime-p-group", is_power_of(Gp.count, ctx.p)));

    const Subgroup CGp = centralizer(G, Gp);

    // Commutator value distribution and the S_c subgroups.
    std::unordered_map<int, std::uint64_t> dist;
    for (int z = 0; z < n; ++z)
        for (int t = 0; t < n; ++t) ++dist[G.comm(z, t)];

    std::unordered_map<int, Subgroup> S;              // S_c = {y : [[a,y],c] = 1 for all a}
    std::unordered_map<int, std::vector<int>> fiber;  // fiber[c][y] = #{a : [[a,y],c] = 1}
    bool s_subgroups = true, s_whole_iff = true;
    for (const auto& [c, count] : dist) {
        (void)count;
        Subgroup Sc;
        Sc.mask.assign(static_cast<std::size_t>(n), 0);
        Sc.count = 0;
        std::vector<int> fib(static_cast<std::size_t>(n), 0);
        for (int y = 0; y < n; ++y) {
            int matches = 0;
            for (int a = 0; a < n; ++a)
                if (G.comm(G.comm(a, y), c) == 0) ++matches;
            fib[static_cast<std::size_t>(y)] = matches;
            if (matches == n) {
                Sc.mask[static_cast<std::size_t>(y)] = 1;
                ++Sc.count;
            }
        }
        s_subgroups = s_subgroups && is_subgroup(G, Sc);
        s_whole_iff = s_whole_iff && ((Sc.count == n) == CGp.contains(c));
        fiber.emplace(c, std::move(fib));
        S.emplace(c, std::move(Sc));
    }
    rep.checks.push_back(make_flag("S-subgroup-closure", s_subgroups));
    rep.checks.push_back(make_flag("S-whole-iff-c-centralizes-Gprime", s_whole_iff));

    BigInt ugly = 0, bad = 0;
    for (const auto& [c, count] : dist) {
        if (CGp.contains(c)) ugly += count;
        bad += BigInt(count) * S.at(c).count;
    }
    rep.ugly = ugly;
    rep.bad = bad;
    rep.good = rep.space - rep.bad;
    {
        BigInt side = BigInt(n) * ugly;
        for (const auto& [c, count] : dist)
            if (!CGp.contains(c)) side += BigInt(count) * S.at(c).count;
        rep.checks.push_back(make_bound("bad-decomposition", bad, 1, side, 1, true));
    }
    {
        QuotientGroup Q = quotient(G, CGp);
        rep.checks.push_back(make_flag("G-mod-CGprime-nonabelian", !Q.group.is_abelian()));
        rep.checks.push_back(make_bound("ugly-matches-commuting-probability", ugly,
                                        BigInt(n) * n, commuting_pairs(Q.group),
                                        BigInt(Q.group.order()) * Q.group.order(), true));
    }
    rep.checks.push_back(make_bound("ugly-le-5/8", ugly * 8, 1, BigInt(n) * n * 5, 1));
    rep.checks.push_back(make_bound("bad-le-13/16", bad * 16, 1, rep.space * 13, 1));

    // Expansion law on sampled (y,z,t), all (a,b) pairs.
    {
        Rng rng(0xE1);
        const int triples = n <= 16 ? -1 : 48;
        bool law = true;
        auto check_triple = [&](int y, int z, int t) {
            const std::vector<int> phi = metab_phi(G, y, z, t);
            const int c = G.comm(z, t);
            for (int a = 0; a < n && law; ++a)
                for (int b = 0; b < n; ++b) {
                    const int corr = G.comm(G.comm(G.comm(a, y), b), c);
                    if (phi[static_cast<std::size_t>(G.mul(a, b))] !=
                        G.mul(G.mul(phi[static_cast<std::size_t>(a)],
                                    phi[static_cast<std::size_t>(b)]),
                              corr)) {
                        law = false;
                        break;
                    }
                }
        };
        if (triples < 0) {
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    for (int t = 0; t < n; ++t) check_triple(y, z, t);
        } else {
            for (int i = 0; i < triples; ++i)
                check_triple(static_cast<int>(rng.below(n)), static_cast<int>(rng.below(n)),
                             static_cast<int>(rng.below(n)));
        }
        rep.checks.push_back(make_flag("expansion-law", law));
    }

    // The primed sets when [G', G, G'] != 1. In that situation the fiber
    // lemma applies outside BAD' (restriction to G'), so the probability
    // bound is assembled from |BAD'|; otherwise from |BAD| itself.
    BigInt bound_for_prob = bad;
    const Subgroup GpG = commutator_subgroup(G, Gp, G.whole());
    const Subgroup C2 = centralizer(G, GpG);
    if (!subgroup_leq(Gp, C2)) {
        QuotientGroup Q2 = quotient(G, C2);
        rep.checks.push_back(make_flag("G-mod-C2-nonabelian", !Q2.group.is_abelian()));
        BigInt ugly_prime = 0, bad_prime = 0;
        bool sp_subgroups = true;
        std::unordered_map<int, Subgroup> Sp;
        for (const auto& [c, count] : dist) {
            if (C2.contains(c)) ugly_prime += count;
            Subgroup Sc;
            Sc.mask.assign(static_cast<std::size_t>(n), 0);
            Sc.count = 0;
            for (int y = 0; y < n; ++y) {
                bool trivial = true;
                for (int h : Gp.elements())
                    if (G.comm(G.comm(h, y), c) != 0) {
                        trivial = false;
                        break;
                    }
                if (trivial) {
                    Sc.mask[static_cast<std::size_t>(y)] = 1;
                    ++Sc.count;
                }
            }
            sp_subgroups = sp_subgroups && is_subgroup(G, Sc);
            bad_prime += BigInt(count) * Sc.count;
            Sp.emplace(c, std::move(Sc));
        }
        rep.ugly_prime = ugly_prime;
        rep.bad_prime = bad_prime;
        rep.checks.push_back(make_flag("S-prime-subgroup-closure", sp_subgroups));
        rep.checks.push_back(make_bound("ugly-prime-le-5/8", ugly_prime * 8, 1, BigInt(n) * n * 5, 1));
        rep.checks.push_back(make_bound("bad-prime-le-13/16", bad_prime * 16, 1, rep.space * 13, 1));

        // Restricted homomorphism and fiber bound outside BAD'.
        Rng rng(0xF2);
        bool restricted = true;
        for (int i = 0; i < 32 && restricted; ++i) {
            const int y = static_cast<int>(rng.below(n)), z = static_cast<int>(rng.below(n)),
                      t = static_cast<int>(rng.below(n));
            const int c = G.comm(z, t);
            if (Sp.at(c).contains(y)) continue;  // in BAD'
            const std::vector<int> phi = metab_phi(G, y, z, t);
            for (int g = 0; g < n && restricted; ++g)
                for (int h : Gp.elements())
                    if (phi[static_cast<std::size_t>(G.mul(g, h))] !=
                        G.mul(phi[static_cast<std::size_t>(g)], phi[static_cast<std::size_t>(h)])) {
                        restricted = false;
                        break;
                    }
            restricted =
                restricted && fiber_bound_check(G, phi, Gp) == FiberVerdict::BoundHolds;
        }
        rep.checks.push_back(make_flag("restricted-hom-and-fiber-outside-bad-prime", restricted));
        bound_for_prob = bad_prime;
    } else {
        // Nice situation: phi_{y,z,t} is a homomorphism off BAD, so every
        // good fiber is at most |G|/2.
        bool good_fibers = true;
        for (const auto& [c, count] : dist) {
            (void)count;
            const Subgroup& Sc = S.at(c);
            for (int y = 0; y < n && good_fibers; ++y)
                if (!Sc.contains(y))
                    good_fibers = 2 * fiber.at(c)[static_cast<std::size_t>(y)] <= n;
        }
        rep.checks.push_back(make_flag("good-fibers-le-half", good_fibers));
    }

    // Exact assembly of the word probability from the per-(y,c) fibers.
    BigInt assembled = 0;
    for (const auto& [c, count] : dist) {
        BigInt per_c = 0;
        for (int y = 0; y < n; ++y) per_c += fiber.at(c)[static_cast<std::size_t>(y)];
        assembled += BigInt(count) * per_c;
    }
    rep.checks.push_back(make_bound("probability-assembly", rep.attained.hits, 1, assembled, 1, true));
    rep.checks.push_back(make_bound("prob-le-half-one-plus-bad-ratio",
                                    rep.attained.hits * 2 * rep.space, rep.attained.total,
                                    rep.space + bound_for_prob, 1));
    return rep;
}

// ------------------------------------------------------------ gamma ladder

GammaRecursionReport gamma_recursion_check(const FiniteGroup& G, int d, const EnumOptions& opts) {
    if (d < 2) throw ContractError("gamma recursion needs d >= 2");
    if (word_is_identity(G, Word::parse("gammaR:" + std::to_string(d))))
        throw ContractError("G satisfies gamma_" + std::to_string(d));

    GammaRecursionReport rep;
    for (int k = 2; k <= d; ++k) {
        GammaStep step;
        step.k = k;
        step.prob = word_probability(G, Word::parse("gammaR:" + std::to_string(k)), 0, opts);
        step.bound_num = big_pow(2, static_cast<unsigned>(k) + 1) - 3;
        step.bound_den = big_pow(2, static_cast<unsigned>(k) + 1);
        step.within = step.prob.leq(step.bound_num, step.bound_den);
        rep.steps.push_back(std::move(step));
    }

    // |BAD| = |{(g_2..g_d) : gamma_{d-1}(g_2..g_d) central}| equals the
    // count of gamma_{d-1} = 1 tuples in (G/Z)^(d-1) times |Z|^(d-1).
    const Subgroup Z = center(G);
    const Word inner_word =
        d == 2 ? Word::parse("x1") : Word::parse("gammaR:" + std::to_string(d - 1));
    const BigInt domain =
        big_pow(static_cast<std::uint64_t>(G.order()), static_cast<unsigned>(d - 1));
    if (domain > opts.budget) throw BudgetError("gamma BAD-set enumeration", domain.str());
    std::vector<int> args(static_cast<std::size_t>(d - 1), 0);
    std::uint64_t bad = 0;
    while (true) {
        if (Z.contains(evaluate(inner_word, G, args))) ++bad;
        int k = d - 2;
        while (k >= 0 && ++args[static_cast<std::size_t>(k)] == G.order()) {
            args[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
    rep.bad_count = bad;
    QuotientGroup Q = quotient(G, Z);
    rep.bad_expected = word_probability(Q.group, inner_word, 0, opts).hits *
                       big_pow(static_cast<std::uint64_t>(Z.count), static_cast<unsigned>(d) - 1);
    rep.bad_identity_holds = rep.bad_count == rep.bad_expected;
    return rep;
}

bool GammaRecursionReport::all_within() const {
    for (const GammaStep& s : steps)
        if (!s.within) return false;
    return bad_identity_holds;
}

}  // namespace wordgap
