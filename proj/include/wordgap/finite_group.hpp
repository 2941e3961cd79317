#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace wordgap {

class FiniteGroup;

// Member mask over element indices. Masks keep membership O(1) in the
// tuple-enumeration inner loops.
struct Subgroup {
    std::vector<std::uint8_t> mask;
    int count = 0;

    bool contains(int g) const { return mask[static_cast<std::size_t>(g)] != 0; }
    std::vector<int> elements() const;
    bool operator==(const Subgroup& o) const { return mask == o.mask; }
};

// Immutable finite group with elements indexed 0..order-1, identity at 0.
// Multiplication is table backed up to kTableCap and composes stored
// permutations (with a hash index) above that. Construction is
// single-threaded; a constructed group is safe to share read-only.
class FiniteGroup {
  public:
    static constexpr int kTableCap = 4096;
    static constexpr int kDefaultOrderCap = 10000;

    // Closure of permutation generators on {0..degree-1}. Elements are
    // ordered canonically: identity first, then breadth-first levels, each
    // level sorted lexicographically by permutation image.
    static FiniteGroup from_generators(int degree, std::vector<std::vector<int>> generators,
                                       std::string name = "",
                                       int order_cap = kDefaultOrderCap);

    // 0-based Cayley table with identity at index 0.
    static FiniteGroup from_table(const std::vector<std::vector<int>>& table, std::string name);

    // spec is one of: cyclic:n, dihedral:n (n = order, even >= 4),
    // quaternion:8, sym:n, alt:n, psl2:q, sz:2, product:spec,spec.
    static FiniteGroup named(const std::string& spec, int order_cap = kDefaultOrderCap);

    int order() const { return n_; }
    const std::string& name() const { return name_; }
    void set_name(std::string s) { name_ = std::move(s); }

    int mul(int a, int b) const {
        return table_.empty() ? perm_mul(a, b) : table_[static_cast<std::size_t>(a) * n_ + b];
    }
    int inv(int a) const { return inv_[a]; }
    int conj(int a, int g) const { return mul(mul(inv(g), a), g); }  // a^g
    int comm(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
    int pow(int a, long long e) const;
    int element_order(int a) const;
    bool is_abelian() const;

    // Indices of the construction generators (empty for table input).
    const std::vector<int>& generators() const { return gens_; }
    // A small generating sequence; computed greedily and cached on demand.
    const std::vector<int>& small_generating_set() const;

    int degree() const { return degree_; }
    bool permutation_backed() const { return !perms_.empty(); }
    const std::vector<int>& perm(int a) const { return perms_[a]; }

    Subgroup whole() const;
    Subgroup trivial() const;

    // An empty placeholder (order 0); only meaningful after assignment.
    FiniteGroup() = default;

  private:
    int perm_mul(int a, int b) const;
    void build_table_and_inverses();

    int n_ = 0;
    int degree_ = 0;
    std::string name_;
    std::vector<int> table_;  // n*n row major; empty above kTableCap
    std::vector<int> inv_;
    std::vector<std::vector<int>> perms_;
    std::unordered_map<std::uint64_t, std::vector<int>> perm_buckets_;  // hash -> indices
    std::vector<int> gens_;
    mutable std::vector<int> small_gens_;
};

struct QuotientGroup {
    FiniteGroup group;
    std::vector<int> projection;  // G index -> quotient index
};

// ------------------------------------------------------------ subgroup math

Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<int>& gens);
Subgroup normal_closure(const FiniteGroup& G, const std::vector<int>& gens);
Subgroup center(const FiniteGroup& G);
Subgroup centralizer(const FiniteGroup& G, const std::vector<int>& elems);
Subgroup centralizer(const FiniteGroup& G, const Subgroup& S);
Subgroup derived_subgroup(const FiniteGroup& G);
// Subgroup generated by [a,b], a in A, b in B.
Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& A, const Subgroup& B);

bool is_subgroup(const FiniteGroup& G, const Subgroup& S);
bool is_normal(const FiniteGroup& G, const Subgroup& S);
bool subgroup_leq(const Subgroup& A, const Subgroup& B);

// Requires N normal. Quotient elements are cosets ordered by their minimal
// member index, so the identity coset is index 0.
QuotientGroup quotient(const FiniteGroup& G, const Subgroup& N);

std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& G);
bool is_solvable(const FiniteGroup& G);
bool is_nilpotent(const FiniteGroup& G);
std::vector<Subgroup> derived_series(const FiniteGroup& G);
std::vector<Subgroup> lower_central_series(const FiniteGroup& G);

// Canonical transversal: the minimal element of each coset of N, ascending.
std::vector<int> coset_reps(const FiniteGroup& G, const Subgroup& N);

// Elements of p-power order; the (normal) Sylow p-subgroup when G is
// nilpotent. Throws InternalCheckError if the set is not closed.
Subgroup sylow_of_nilpotent(const FiniteGroup& G, int p);

// Every automorphism of G as a permutation of element indices. Enumerated by
// assigning generator images and replaying the generator derivation; intended
// for small groups (|G| <= ~100).
std::vector<std::vector<int>> automorphism_perms(const FiniteGroup& G);

// Group axioms: exhaustive for order <= exhaustive_cap, randomized triples
// beyond (10^5 draws). Returns false with no diagnostics; tests use it.
bool check_group_axioms(const FiniteGroup& G, int exhaustive_cap = 256,
                        std::uint64_t seed = 0x5eed);

}  // namespace wordgap
