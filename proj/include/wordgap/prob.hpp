#pragma once

#include "wordgap/finite_group.hpp"
#include "wordgap/util.hpp"
#include "wordgap/words.hpp"

#include <cstdint>
#include <string>

namespace wordgap {

// Exact rational count of word-map solutions. Counts are arbitrary-precision:
// |G|^d overflows 64 bits already at |G| = 360, d = 7. The float rendering is
// derived, never authoritative.
struct ExactProbability {
    BigInt hits = 0;
    BigInt total = 1;

    std::pair<BigInt, BigInt> reduced() const;
    double to_double() const;

    // this <= other, compared exactly by cross multiplication.
    bool leq(const ExactProbability& other) const { return hits * other.total <= other.hits * total; }
    bool leq(const BigInt& num, const BigInt& den) const { return hits * den <= num * total; }
    bool eq(const BigInt& num, const BigInt& den) const { return hits * den == num * total; }
};

struct EnumOptions {
    std::uint64_t budget = 10'000'000'000ULL;  // domain size cap for exact enumeration
    unsigned threads = 1;
};

// hits = |w^-1(target)| over G^d, total = |G|^d, d = rank(w). Exhaustive
// enumeration parallelized over the first variable; refuses (BudgetError)
// when |G|^d exceeds the budget.
ExactProbability word_probability(const FiniteGroup& G, const Word& w, int target,
                                  const EnumOptions& opts = {});

// hits over N^d of w(n_1 g_1, ..., n_d g_d) = 1, total = |N|^d. reps must
// provide at least rank(w) elements of G; N must be normal.
ExactProbability coset_probability(const FiniteGroup& G, const Subgroup& N, const Word& w,
                                   const std::vector<int>& reps, const EnumOptions& opts = {});

struct ReductionCheck {
    bool holds = false;
    ExactProbability in_group;     // P_{w=g}(G)
    ExactProbability in_quotient;  // P_{w=gN}(G/N)
};

// The reduction inequality P_{w=g}(G) <= P_{w=gN}(G/N), both sides exact.
ReductionCheck reduction_check(const FiniteGroup& G, const Subgroup& N, const Word& w, int g,
                               const EnumOptions& opts = {});

// Exact integer identity |w^-1(1) in G^d| = sum over rep tuples of the coset
// hit counts of N.
bool decomposition_check(const FiniteGroup& G, const Subgroup& N, const Word& w,
                         const EnumOptions& opts = {});

struct SampleEstimate {
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
    double estimate = 0.0;
    double radius = 0.0;  // 99% Hoeffding: sqrt(ln(2/0.01) / (2 samples))
};

SampleEstimate sample_probability(const FiniteGroup& G, const Word& w, int target,
                                  std::uint64_t samples, std::uint64_t seed);

}  // namespace wordgap
