#include "wordgap/vsmb.hpp"

#include "wordgap/errors.hpp"
#include "wordgap/util.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace wordgap {
namespace {

constexpr std::uint64_t kPhase1Trials = 4096;

// ------------------------------------------------------------------ backends

// Elements of <Inn(S), D, sigma> in semidirect normal form.
struct MatrixBackend {
    const Psl2Group& S;
    const Psl2AutGroup& A;
    using El = Psl2Aut;

    El identity() const { return A.identity(); }
    El mul(const El& a, const El& b) const { return A.compose(a, b); }
    El inv(const El& a) const { return A.inverse(a); }
    static bool eq(const El& a, const El& b) { return a == b; }
    int domain_size() const { return S.order(); }
    El embed(int s) const { return A.inner(s); }

    std::string render(const El& e) const {
        const Mat2& m = S.mat(e.inner);
        std::ostringstream os;
        os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
        if (e.field_pow) os << "*s^" << e.field_pow;
        if (e.diag_pow) os << "*D^" << e.diag_pow;
        return os.str();
    }
};

// Elements of Aut(S) as a concrete permutation group on S's elements, with
// S embedded through x -> s^-1 x s (a homomorphism under the ambient group's
// composition order).
struct PermBackend {
    const FiniteGroup& amb;
    const std::vector<int>& inner_index;
    using El = int;

    El identity() const { return 0; }
    El mul(El a, El b) const { return amb.mul(a, b); }
    El inv(El a) const { return amb.inv(a); }
    static bool eq(El a, El b) { return a == b; }
    int domain_size() const { return static_cast<int>(inner_index.size()); }
    El embed(int s) const { return inner_index[static_cast<std::size_t>(s)]; }

    std::string render(El e) const { return "aut#" + std::to_string(e); }
};

template <class B>
typename B::El eval_word(const B& b, const Word& w, const std::vector<typename B::El>& args) {
    typename B::El acc = b.identity();
    for (const Letter& l : w.letters()) {
        const auto& a = args[static_cast<std::size_t>(l.var - 1)];
        acc = b.mul(acc, l.sign > 0 ? a : b.inv(a));
    }
    return acc;
}

template <class B>
VsmbInstance run_instance(const B& b, const Word& w, const std::vector<typename B::El>& tuple,
                          std::uint64_t budget, std::uint64_t inst_seed) {
    using El = typename B::El;
    const int d = w.rank();
    const std::size_t n = static_cast<std::size_t>(b.domain_size());

    VsmbInstance out;
    const El base = eval_word(b, w, tuple);
    out.evals_used = 1;

    std::vector<El> args = tuple;
    auto witness_from = [&](const std::vector<int>& s_args, const El& value) {
        VsmbWitness wit;
        wit.args = s_args;
        wit.base_value = b.render(base);
        wit.witness_value = b.render(value);
        out.witness = std::move(wit);
        out.verdict = VerdictKind::NonConstant;
    };

    // Phase 1: seeded random shifts compared against the base value.
    if (d > 0) {
        Rng rng(inst_seed);
        const std::uint64_t trials = std::min<std::uint64_t>(kPhase1Trials, budget);
        std::vector<int> s_args(static_cast<std::size_t>(d), 0);
        for (std::uint64_t t = 0; t < trials; ++t) {
            for (int k = 0; k < d; ++k) {
                s_args[static_cast<std::size_t>(k)] = static_cast<int>(rng.below(n));
                args[static_cast<std::size_t>(k)] = b.mul(
                    b.embed(s_args[static_cast<std::size_t>(k)]), tuple[static_cast<std::size_t>(k)]);
            }
            const El v = eval_word(b, w, args);
            ++out.evals_used;
            if (!B::eq(v, base)) {
                witness_from(s_args, v);
                return out;
            }
        }
    }

    // Phase 2: exhaustive sweep when the domain fits the budget. Constant is
    // only ever concluded here.
    const BigInt full = big_pow(n, static_cast<unsigned>(d));
    if (full <= budget) {
        std::vector<int> idx(static_cast<std::size_t>(d), 0);
        args = tuple;
        while (true) {
            const El v = eval_word(b, w, args);
            ++out.evals_used;
            if (!B::eq(v, base)) {
                witness_from(idx, v);
                return out;
            }
            int k = d - 1;
            while (k >= 0) {
                std::size_t i = static_cast<std::size_t>(++idx[static_cast<std::size_t>(k)]);
                if (i == n) {
                    idx[static_cast<std::size_t>(k)] = 0;
                    args[static_cast<std::size_t>(k)] = tuple[static_cast<std::size_t>(k)];
                    --k;
                } else {
                    args[static_cast<std::size_t>(k)] =
                        b.mul(b.embed(static_cast<int>(i)), tuple[static_cast<std::size_t>(k)]);
                    break;
                }
            }
            if (k < 0) break;
        }
        out.verdict = VerdictKind::Constant;
        return out;
    }

    out.verdict = VerdictKind::Unknown;
    return out;
}

// Re-evaluates the stored witness; a mismatch falsifies the report.
template <class B>
void reverify_witness(const B& b, const Word& w, const std::vector<typename B::El>& tuple,
                      const VsmbInstance& inst) {
    if (inst.verdict != VerdictKind::NonConstant || !inst.witness) return;
    using El = typename B::El;
    const El base = eval_word(b, w, tuple);
    std::vector<El> args = tuple;
    for (std::size_t k = 0; k < args.size(); ++k)
        args[k] = b.mul(b.embed(inst.witness->args[k]), tuple[k]);
    const El v = eval_word(b, w, args);
    if (B::eq(v, base) || b.render(base) != inst.witness->base_value ||
        b.render(v) != inst.witness->witness_value)
        throw InternalCheckError("stored witness failed re-verification");
}

// `domain_all_inner` marks backends whose whole tuple domain lies inside the
// embedded copy of S (complete groups, where Aut = Inn). There every coset
// word map is the identity-tuple map composed with the bijection
// s_i -> s_i * t_i of the domain, so one exhaustive sweep of the identity
// instance settles constancy for the entire variation.
template <class B>
void run_group(const B& b, const std::vector<typename B::El>& domain,
               const std::vector<std::string>& domain_render, const std::string& group_name,
               const std::vector<std::pair<int, Word>>& checked_variations, bool domain_all_inner,
               const VsmbOptions& opts, VsmbGroupReport& rep) {
    rep.group = group_name;
    rep.tuple_domain = domain_render;
    const std::uint64_t group_hash = mix64(std::hash<std::string>{}(group_name));

    struct Job {
        int variation;
        const Word* word;
        std::vector<int> tuple_idx;
    };
    std::vector<Job> jobs;
    std::vector<VsmbInstance> settled;

    for (const auto& [var_idx, word] : checked_variations) {
        const int d = word.rank();
        const bool base_settled = domain_all_inner && d > 0 && B::eq(domain[0], b.identity());
        bool variation_constant = false;
        if (base_settled) {
            std::vector<typename B::El> identity_tuple(static_cast<std::size_t>(d), b.identity());
            VsmbInstance base = run_instance(b, word, identity_tuple, opts.budget,
                                             hash_combine(hash_combine(opts.seed, group_hash),
                                                          static_cast<std::uint64_t>(var_idx)));
            base.variation_index = var_idx;
            base.tuple.assign(static_cast<std::size_t>(d), 0);
            reverify_witness(b, word, identity_tuple, base);
            variation_constant = base.verdict == VerdictKind::Constant;
            settled.push_back(std::move(base));
        }
        std::vector<int> idx(static_cast<std::size_t>(d), 0);
        bool first = true;
        while (true) {
            if (!(base_settled && first)) {
                if (base_settled && variation_constant) {
                    VsmbInstance inst;
                    inst.variation_index = var_idx;
                    inst.tuple = idx;
                    inst.verdict = VerdictKind::Constant;
                    inst.evals_used = 0;  // verdict shared from the identity-tuple sweep
                    settled.push_back(std::move(inst));
                } else {
                    jobs.push_back({var_idx, &word, idx});
                }
            }
            first = false;
            int k = d - 1;
            while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == static_cast<int>(domain.size())) {
                idx[static_cast<std::size_t>(k)] = 0;
                --k;
            }
            if (k < 0) break;
        }
    }

    std::vector<VsmbInstance> results(jobs.size());
    parallel_chunks(jobs.size(), opts.threads, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t j = lo; j < hi; ++j) {
            const Job& job = jobs[j];
            std::vector<typename B::El> tuple;
            tuple.reserve(job.tuple_idx.size());
            for (int t : job.tuple_idx) tuple.push_back(domain[static_cast<std::size_t>(t)]);
            std::uint64_t seed = hash_combine(opts.seed, group_hash);
            seed = hash_combine(seed, static_cast<std::uint64_t>(job.variation));
            for (int t : job.tuple_idx) seed = hash_combine(seed, static_cast<std::uint64_t>(t));
            VsmbInstance inst = run_instance(b, *job.word, tuple, opts.budget, seed);
            inst.variation_index = job.variation;
            inst.tuple = job.tuple_idx;
            reverify_witness(b, *job.word, tuple, inst);
            results[j] = std::move(inst);
        }
    });

    for (std::vector<VsmbInstance>* batch : {&settled, &results})
        for (VsmbInstance& inst : *batch) {
            switch (inst.verdict) {
                case VerdictKind::NonConstant: ++rep.nonconstant; break;
                case VerdictKind::Constant: ++rep.constant; break;
                case VerdictKind::Unknown: ++rep.unknown; break;
            }
            if (inst.verdict != VerdictKind::NonConstant || opts.keep_nonconstant_instances)
                rep.instances.push_back(std::move(inst));
        }
}

struct PermAmbient {
    FiniteGroup amb;
    std::vector<int> inner_index;
};

PermAmbient build_perm_ambient(const FiniteGroup& S) {
    PermAmbient out{FiniteGroup::from_generators(std::max(S.order(), 1), automorphism_perms(S),
                                                 "Aut(" + S.name() + ")"),
                    {}};
    out.inner_index.assign(static_cast<std::size_t>(S.order()), -1);
    for (int s = 0; s < S.order(); ++s) {
        std::vector<int> conj_by_s(static_cast<std::size_t>(S.order()));
        for (int x = 0; x < S.order(); ++x) conj_by_s[static_cast<std::size_t>(x)] = S.conj(x, s);
        for (int i = 0; i < out.amb.order(); ++i)
            if (out.amb.perm(i) == conj_by_s) {
                out.inner_index[static_cast<std::size_t>(s)] = i;
                break;
            }
        if (out.inner_index[static_cast<std::size_t>(s)] < 0)
            throw InternalCheckError("inner automorphism missing from Aut(S)");
    }
    // The embedding must be a homomorphism into the ambient group.
    for (int s = 0; s < S.order(); ++s)
        for (int t = 0; t < S.order(); ++t)
            if (out.amb.mul(out.inner_index[static_cast<std::size_t>(s)],
                            out.inner_index[static_cast<std::size_t>(t)]) !=
                out.inner_index[static_cast<std::size_t>(S.mul(s, t))])
                throw InternalCheckError("inner embedding is not a homomorphism");
    return out;
}

}  // namespace

std::string verdict_name(VerdictKind v) {
    switch (v) {
        case VerdictKind::NonConstant: return "nonconstant";
        case VerdictKind::Constant: return "constant";
        default: return "unknown";
    }
}

std::vector<std::string> default_vsmb_groups(const Word& w) {
    std::vector<std::string> out = {"psl2:2", "sz:2"};
    int m = 0;
    for (int v = 1; v <= w.rank(); ++v) m = std::max(m, w.multiplicity(v));
    if (m >= 3) {
        out.push_back("psl2:3");
        out.push_back("psl2:9");
    }
    return out;
}

VsmbInstance check_instance(const Psl2Group& S, const Psl2AutGroup& A, const Word& word,
                            const std::vector<Psl2Aut>& tuple, const VsmbOptions& opts) {
    if (static_cast<int>(tuple.size()) != word.rank())
        throw ContractError("tuple length must equal the word rank");
    MatrixBackend b{S, A};
    VsmbInstance inst = run_instance(b, word, tuple, opts.budget, mix64(opts.seed));
    reverify_witness(b, word, tuple, inst);
    return inst;
}

VsmbReport check_word(const Word& w, const std::vector<std::string>& groups,
                      const VsmbOptions& opts) {
    VsmbReport report;
    report.word = w.str();
    report.restricted_stream = !opts.full_variation_stream;
    report.budget = opts.budget;
    report.seed = opts.seed;

    std::vector<Variation> stream = opts.full_variation_stream
                                        ? variations(w, opts.variation_budget)
                                        : restricted_variations(w);
    std::vector<std::pair<int, Word>> surviving;
    for (std::size_t i = 0; i < stream.size(); ++i) {
        const PruneResult pr = vsmb_prune(stream[i].induced);
        VsmbVariationInfo info;
        info.id = stream[i].id();
        info.induced = stream[i].induced.str();
        info.rank = stream[i].induced.rank();
        info.pruned = pr.vsmb_by_lemma;
        info.prune_rule = pr.rule;
        info.prune_reason = pr.reason;
        report.variations.push_back(std::move(info));
        if (!pr.vsmb_by_lemma) surviving.push_back({static_cast<int>(i), stream[i].induced});
    }

    for (const std::string& spec : groups) {
        VsmbGroupReport grep;
        if (spec == "psl2:2" || spec == "sz:2") {
            FiniteGroup S = FiniteGroup::named(spec);
            PermAmbient amb = build_perm_ambient(S);
            PermBackend b{amb.amb, amb.inner_index};
            std::vector<int> domain(static_cast<std::size_t>(amb.amb.order()));
            std::vector<std::string> render;
            for (int i = 0; i < amb.amb.order(); ++i) {
                domain[static_cast<std::size_t>(i)] = i;
                render.push_back(b.render(i));
            }
            grep.backend = "perm";
            // Aut = Inn for these complete groups; the reparametrization
            // shortcut then applies.
            const bool all_inner = amb.amb.order() == S.order();
            run_group(b, domain, render, spec, surviving, all_inner, opts, grep);
        } else if (spec.rfind("psl2:", 0) == 0) {
            const std::uint32_t q = static_cast<std::uint32_t>(std::stoul(spec.substr(5)));
            Psl2Group S(q);
            Psl2AutGroup A(S);
            MatrixBackend b{S, A};
            std::vector<Psl2Aut> domain = A.outer_coset_reps();
            std::vector<std::string> render;
            for (const Psl2Aut& a : domain) render.push_back(b.render(a));
            grep.backend = "matrix";
            run_group(b, domain, render, spec, surviving, false, opts, grep);
        } else {
            throw ContractError("vsmb targets are psl2:q or sz:2, got '" + spec + "'");
        }
        report.nonconstant += grep.nonconstant;
        report.constant += grep.constant;
        report.unknown += grep.unknown;
        report.groups.push_back(std::move(grep));
    }
    return report;
}

bool inner_invariance_check(const Psl2Group& S, const Psl2AutGroup& A, const Word& word,
                            const std::vector<Psl2Aut>& tuple, const std::vector<int>& twist,
                            const VsmbOptions& opts) {
    if (twist.size() != tuple.size() || static_cast<int>(tuple.size()) != word.rank())
        throw ContractError("twist and tuple must match the word rank");
    MatrixBackend b{S, A};
    const int d = word.rank();
    std::vector<Psl2Aut> twisted(tuple.size());
    for (std::size_t k = 0; k < tuple.size(); ++k)
        twisted[k] = A.compose(A.inner(twist[k]), tuple[k]);

    auto map_at = [&](const std::vector<Psl2Aut>& base, const std::vector<int>& s) {
        std::vector<Psl2Aut> args(base.size());
        for (std::size_t k = 0; k < base.size(); ++k) args[k] = A.compose(A.inner(s[k]), base[k]);
        return eval_word(b, word, args);
    };

    // Pointwise: the twisted map is the original reparametrized by
    // s_k -> s_k * t_k.
    Rng rng(mix64(opts.seed) ^ 0x77);
    const std::uint64_t samples = std::min<std::uint64_t>(opts.budget, 10000);
    std::vector<int> s(static_cast<std::size_t>(d), 0), shifted(static_cast<std::size_t>(d), 0);
    for (std::uint64_t t = 0; t < samples; ++t) {
        for (int k = 0; k < d; ++k) {
            s[static_cast<std::size_t>(k)] = static_cast<int>(rng.below(S.order()));
            shifted[static_cast<std::size_t>(k)] =
                S.mul(s[static_cast<std::size_t>(k)], twist[static_cast<std::size_t>(k)]);
        }
        if (!(map_at(twisted, s) == map_at(tuple, shifted))) return false;
    }

    // Image sets coincide exactly on domains small enough to sweep.
    const BigInt full = big_pow(static_cast<std::uint64_t>(S.order()), static_cast<unsigned>(d));
    if (full <= opts.budget) {
        auto image_set = [&](const std::vector<Psl2Aut>& base) {
            std::vector<std::uint64_t> keys;
            std::vector<int> idx(static_cast<std::size_t>(d), 0);
            while (true) {
                keys.push_back(A.hash(map_at(base, idx)));
                int k = d - 1;
                while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == S.order()) {
                    idx[static_cast<std::size_t>(k)] = 0;
                    --k;
                }
                if (k < 0) break;
            }
            std::sort(keys.begin(), keys.end());
            keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
            return keys;
        };
        if (image_set(tuple) != image_set(twisted)) return false;
    }
    return true;
}

std::string VsmbReport::to_json() const {
    nlohmann::json j;
    j["word"] = word;
    j["restricted_stream"] = restricted_stream;
    j["budget"] = budget;
    j["seed"] = seed;
    j["summary"] = {{"nonconstant", nonconstant},
                    {"constant", constant},
                    {"unknown", unknown},
                    {"vsmb_supported", vsmb_supported()}};
    j["variations"] = nlohmann::json::array();
    for (const VsmbVariationInfo& v : variations)
        j["variations"].push_back({{"id", v.id},
                                   {"induced", v.induced},
                                   {"rank", v.rank},
                                   {"pruned", v.pruned},
                                   {"prune_rule", v.prune_rule},
                                   {"prune_reason", v.prune_reason}});
    j["groups"] = nlohmann::json::array();
    for (const VsmbGroupReport& g : groups) {
        nlohmann::json gj;
        gj["group"] = g.group;
        gj["backend"] = g.backend;
        gj["tuple_domain"] = g.tuple_domain;
        gj["nonconstant"] = g.nonconstant;
        gj["constant"] = g.constant;
        gj["unknown"] = g.unknown;
        gj["instances"] = nlohmann::json::array();
        for (const VsmbInstance& inst : g.instances) {
            nlohmann::json ij;
            ij["variation"] = inst.variation_index;
            ij["tuple"] = inst.tuple;
            ij["verdict"] = verdict_name(inst.verdict);
            ij["evals_used"] = inst.evals_used;
            if (inst.witness)
                ij["witness"] = {{"args", inst.witness->args},
                                 {"base_value", inst.witness->base_value},
                                 {"witness_value", inst.witness->witness_value}};
            gj["instances"].push_back(std::move(ij));
        }
        j["groups"].push_back(std::move(gj));
    }
    return j.dump(2);
}

}  // namespace wordgap
