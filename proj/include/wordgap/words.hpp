#pragma once

#include "wordgap/finite_group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wordgap {

struct Letter {
    int var;   // 1-based variable number
    int sign;  // +1 or -1
    bool operator==(const Letter&) const = default;
};

// Freely reduced word over X_1..X_9, length at most 64. Induced words of
// variations may use more variables (one per occurrence class), bounded by
// the length cap.
class Word {
  public:
    static constexpr int kMaxRank = 9;
    static constexpr std::size_t kMaxLength = 64;

    Word() = default;  // empty word

    // Reduces the letter sequence; enforces the length cap and a variable
    // bound of kMaxLength (the surface syntax itself enforces kMaxRank).
    static Word from_letters(std::vector<Letter> letters);

    // spec is a named word (comm, engel2, metab, gamma:d, gammaR:d) or
    // bracket syntax over x1..x9 with ' for inverse; [u,v] = u'v'uv and
    // [u,v,w] = [[u,v],w].
    static Word parse(const std::string& spec);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    // Highest variable number appearing (the arity of the induced map).
    int rank() const { return rank_; }
    int multiplicity(int var) const;
    std::vector<int> multiplicities() const;  // index 0 unused
    Word inverse() const;

    std::string str() const;
    bool operator==(const Word&) const = default;

  private:
    std::vector<Letter> letters_;
    int rank_ = 0;
};

// Substitution: product of args[letter.var - 1]^sign in letter order.
// args.size() must be >= rank.
int evaluate(const Word& w, const FiniteGroup& G, const std::vector<int>& args);

// Same evaluation over any group-like context (used for automorphism-valued
// arguments). Ctx provides El identity() / El mul(El, El) / El inv(El).
template <class Ctx, class El>
El evaluate_in(const Word& w, const Ctx& ctx, const std::vector<El>& args) {
    El acc = ctx.identity();
    for (const Letter& l : w.letters()) {
        const El& a = args[static_cast<std::size_t>(l.var - 1)];
        acc = ctx.mul(acc, l.sign > 0 ? a : ctx.inv(a));
    }
    return acc;
}

// A second index on every occurrence, canonical up to renaming within each
// variable: the labels of each variable form a restricted growth string.
struct Variation {
    Word base;
    std::vector<int> labels;      // per letter, 1-based second index
    Word induced;                 // over doubled variables, renumbered 1..K
    std::vector<int> origin;      // induced variable (1-based) -> base variable
    bool is_identity_variation() const;
    std::string id() const;       // e.g. "1:1111|2:112233"
};

// Full canonical stream; count is prod_i Bell(mu_i). Throws BudgetError if
// that count exceeds the budget.
std::vector<Variation> variations(const Word& w, std::uint64_t budget = 1000000);

// Variations in which at most one variable is split, into at most two
// classes. Everything outside this stream is discharged by vsmb_prune for
// the words this engine targets; the full stream stays available behind a
// flag for cross-checking.
std::vector<Variation> restricted_variations(const Word& w);

struct PruneResult {
    bool vsmb_by_lemma = false;
    int rule = 0;  // 1, 2 or 3 when vsmb_by_lemma
    std::string reason;
};

// Syntactic VSMB certificates: (1) a multiplicity-1 variable, (2) a
// multiplicity-2 variable occurring with equal signs, or with opposite signs
// around an inner word that is itself certified (checked recursively),
// (3) length <= 8 and not the 8th power of one variable. Anything else is
// NEEDS_CHECK; the empty word is never certified.
PruneResult vsmb_prune(const Word& w);

std::uint64_t bell_number(int n);

}  // namespace wordgap
