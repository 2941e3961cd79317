#pragma once

#include "wordgap/finite_group.hpp"
#include "wordgap/psl2.hpp"
#include "wordgap/words.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wordgap {

enum class VerdictKind { NonConstant, Constant, Unknown };

std::string verdict_name(VerdictKind v);

struct VsmbWitness {
    // The base tuple (all coordinates of S at the identity) evaluates to
    // base_value; shifting by args gives witness_value != base_value.
    std::vector<int> args;  // S-element indices
    std::string base_value;
    std::string witness_value;
};

struct VsmbInstance {
    int variation_index = 0;       // into VsmbReport::variations
    std::vector<int> tuple;        // indices into the group's tuple domain
    VerdictKind verdict = VerdictKind::Unknown;
    std::optional<VsmbWitness> witness;
    std::uint64_t evals_used = 0;
};

struct VsmbVariationInfo {
    std::string id;
    std::string induced;
    int rank = 0;
    bool pruned = false;
    int prune_rule = 0;
    std::string prune_reason;
};

struct VsmbGroupReport {
    std::string group;
    std::string backend;                    // "matrix" or "perm"
    std::vector<std::string> tuple_domain;  // rendered domain elements
    std::uint64_t nonconstant = 0, constant = 0, unknown = 0;
    std::vector<VsmbInstance> instances;
};

struct VsmbReport {
    std::string word;
    bool restricted_stream = true;
    std::uint64_t budget = 0, seed = 0;
    std::vector<VsmbVariationInfo> variations;
    std::vector<VsmbGroupReport> groups;
    std::uint64_t nonconstant = 0, constant = 0, unknown = 0;

    // Supported outright only with every checked instance NonConstant;
    // Unknown instances downgrade the claim to "up to listed unknowns".
    bool vsmb_supported() const { return constant == 0 && unknown == 0; }
    std::string to_json() const;
};

struct VsmbOptions {
    std::uint64_t budget = 10'000'000;  // per-instance evaluation budget
    std::uint64_t seed = 0;
    unsigned threads = 1;
    bool full_variation_stream = false;
    std::uint64_t variation_budget = 1'000'000;
    bool keep_nonconstant_instances = true;  // false drops bulky NonConstant rows from the report
};

// The built-in target list: psl2:2 and sz:2 via their full automorphism
// groups, then psl2:p^n for odd p <= max multiplicity with n a power of 2,
// within the default compute budget (q in {3, 9}).
std::vector<std::string> default_vsmb_groups(const Word& w);

// Decides constancy of every varied coset word map of w surviving the prune
// on each listed group. Groups are psl2:q specs or sz:2; psl2:2 and sz:2 run
// on the permutation backend with full automorphism tuples, other q on the
// matrix backend with outer coset representative tuples.
VsmbReport check_word(const Word& w, const std::vector<std::string>& groups,
                      const VsmbOptions& opts = {});

// Single-instance check on the matrix backend, exposed for tests and spot
// runs. tuple.size() must equal the word's rank.
VsmbInstance check_instance(const Psl2Group& S, const Psl2AutGroup& A, const Word& word,
                            const std::vector<Psl2Aut>& tuple, const VsmbOptions& opts = {});

// Verifies that twisting each tuple entry by an inner automorphism changes
// the coset word map only by reparametrizing its domain: pointwise equality
// under the shift, plus image-set equality when |S|^d fits the budget.
bool inner_invariance_check(const Psl2Group& S, const Psl2AutGroup& A, const Word& word,
                            const std::vector<Psl2Aut>& tuple, const std::vector<int>& twist,
                            const VsmbOptions& opts = {});

}  // namespace wordgap
