#pragma once

#include "wordgap/finite_group.hpp"
#include "wordgap/prob.hpp"
#include "wordgap/words.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wordgap {

// The reduced setting of the solvable analysis: a solvable group whose verbal
// subgroup V = w(G) is its unique minimal normal subgroup, an elementary
// abelian p-group of the recorded dimension.
struct VerbalContext {
    FiniteGroup group;
    Word word;
    Subgroup verbal;
    int p = 0;
    int dim = 0;
    std::vector<int> reps;        // canonical transversal of V in the reduced group
    std::vector<int> rep_of;      // element -> its coset representative
    std::vector<int> projection;  // original group -> reduced group
    std::vector<std::string> reduction_trail;
    bool trivial_action = false;  // C_G(V) = G
};

// Subgroup generated by all values of w (normal, since the value set is
// closed under conjugation). Structural shortcuts are used for the named
// words (derived subgroups and lower central terms); anything else is
// enumerated within the budget.
Subgroup verbal_subgroup(const FiniteGroup& G, const Word& w, std::uint64_t budget = 100'000'000);

bool word_is_identity(const FiniteGroup& G, const Word& w, std::uint64_t budget = 100'000'000);

// Repeatedly quotients by the smallest minimal normal subgroup that keeps w
// a non-identity, until w(G) is the unique minimal normal subgroup.
VerbalContext reduce_to_minimal_verbal(const FiniteGroup& G, const Word& w);

// The endomorphism tuple of w(a_1 r_1, ..., a_d r_d) = prod a_i^{w_i(r)} * w(r):
// one dim x dim matrix over F_p per variable, extracted on a basis of V and
// verified linear on all of V.
struct ExponentOperators {
    int p = 0, dim = 0;
    std::vector<std::vector<std::uint8_t>> mats;  // row-major dim x dim
    int base_value = 0;

    bool zero(std::size_t i) const;
    bool all_zero() const;
};

ExponentOperators derive_operators(const VerbalContext& ctx, const std::vector<int>& rep_tuple);

struct CheckedBound {
    std::string name;
    BigInt lhs_num = 0, lhs_den = 1;  // checked relation: lhs <= rhs (or == for *-eq names)
    BigInt rhs_num = 0, rhs_den = 1;
    bool equality = false;
    bool holds = false;
};

struct BadnessReport {
    std::string branch;
    BigInt space = 0;  // size of the tuple space BAD is counted in
    BigInt bad = 0;
    BigInt good = 0;
    std::optional<BigInt> ugly, bad_prime, ugly_prime;
    std::vector<CheckedBound> checks;
    ExactProbability attained;

    bool all_hold() const;
    const CheckedBound* find(const std::string& name) const;
    std::string to_json() const;
};

// The general operator-counting principle: BAD = rep tuples whose operators
// all vanish, plus the probability bound 1/2 (1 + |BAD|/|R|^d) and its
// sharper 1/p form, both exact.
BadnessReport badness_report(const VerbalContext& ctx, const EnumOptions& opts = {});

// Word-specific analyses mirroring the trivial/nontrivial action split.
BadnessReport engel_badness(const VerbalContext& ctx, const EnumOptions& opts = {});
BadnessReport metab_badness(const VerbalContext& ctx, const EnumOptions& opts = {});

// phi_y : a -> [a,y,y], with its expansion law
// phi_y(ab) = phi_y(a) phi_y(b) [a,y,b,y] checked on all pairs for |G| <= 256
// (the law belongs to the reduced central setting; a violation is an
// internal-consistency error there).
struct PhiMap {
    int y = 0;
    std::vector<int> image;
    bool expansion_law_checked = false;
};

PhiMap engel_phi(const FiniteGroup& G, int y);

// a -> [[a,y],[z,t]].
std::vector<int> metab_phi(const FiniteGroup& G, int y, int z, int t);

enum class FiberVerdict { HypothesisViolated, BoundHolds, BoundViolated };

// Lemma on fibers of restricted homomorphisms: if phi(gh) = phi(g) phi(h) for
// all g in G, h in H, and phi(H) != 1, then |phi^-1(1)| <= |G|/2.
FiberVerdict fiber_bound_check(const FiniteGroup& G, const std::vector<int>& phi, const Subgroup& H);

struct GammaStep {
    int k = 0;
    ExactProbability prob;
    BigInt bound_num = 0, bound_den = 1;  // 1 - 3/2^(k+1)
    bool within = false;
};

struct GammaRecursionReport {
    std::vector<GammaStep> steps;
    BigInt bad_count = 0;     // tuples in G^(d-1) with gamma_{d-1} central
    BigInt bad_expected = 0;  // quotient count * |Z|^(d-1)
    bool bad_identity_holds = false;
    bool all_within() const;
};

// P_{gamma_k = 1}(G) <= 1 - 3/2^(k+1) for k = 2..d (right-nested gamma), plus
// the central-tuple counting identity behind the recursion.
GammaRecursionReport gamma_recursion_check(const FiniteGroup& G, int d,
                                           const EnumOptions& opts = {});

}  // namespace wordgap
