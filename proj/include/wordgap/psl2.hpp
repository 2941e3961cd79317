#pragma once

#include "wordgap/fq.hpp"
#include "wordgap/util.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace wordgap {

struct Mat2 {
    std::uint32_t a = 1, b = 0, c = 0, d = 1;
    bool operator==(const Mat2&) const = default;
};

// PSL_2(q) as canonical determinant-1 matrices modulo +-I. An element's
// representative is the sign whose first nonzero entry (row major) is minimal
// under the field's value order; for even q the two signs coincide.
class Psl2Group {
  public:
    explicit Psl2Group(std::uint32_t q);

    const Fq& field() const { return F_; }
    std::uint32_t q() const { return F_.q(); }
    int order() const { return static_cast<int>(elems_.size()); }
    int identity() const { return identity_; }

    const Mat2& mat(int idx) const { return elems_[static_cast<std::size_t>(idx)]; }
    int index_of(const Mat2& m) const;  // canonicalizes first
    Mat2 canonical(Mat2 m) const;

    Mat2 mat_mul(const Mat2& x, const Mat2& y) const;
    Mat2 mat_inv(const Mat2& x) const;  // for det 1: [[d,-b],[-c,a]]
    std::uint32_t det(const Mat2& x) const;

    int mul(int x, int y) const { return index_of(mat_mul(mat(x), mat(y))); }
    int inv(int x) const { return index_of(mat_inv(mat(x))); }

  private:
    Fq F_;
    std::vector<Mat2> elems_;
    std::unordered_map<std::uint64_t, std::vector<int>> index_;
    int identity_ = 0;
};

// Element of <Inn(S), D, sigma> <= Aut(PSL_2(q)) in the unique normal form
// inn(m) . sigma^i . D^j (function composition; D^j applied first). D is
// conjugation by diag(omega, 1), sigma raises entries to the p-th power.
struct Psl2Aut {
    int inner;      // index into the Psl2Group
    int field_pow;  // i in [0, n)
    int diag_pow;   // j in [0, q-1)
    bool operator==(const Psl2Aut&) const = default;
};

class Psl2AutGroup {
  public:
    explicit Psl2AutGroup(const Psl2Group& S);

    const Psl2Group& group() const { return S_; }

    Psl2Aut identity() const { return {S_.identity(), 0, 0}; }
    Psl2Aut inner(int s) const { return {s, 0, 0}; }
    Psl2Aut frobenius() const { return {S_.identity(), 1 % n_, 0}; }
    Psl2Aut diagonal() const;  // q odd only
    Psl2Aut outer(int i, int j) const;

    bool is_identity(const Psl2Aut& a) const {
        return a.inner == S_.identity() && a.field_pow == 0 && a.diag_pow == 0;
    }

    // Function composition: apply(compose(a, b), x) == apply(a, apply(b, x)).
    Psl2Aut compose(const Psl2Aut& a, const Psl2Aut& b) const;
    Psl2Aut inverse(const Psl2Aut& a) const;

    Mat2 apply_mat(const Psl2Aut& a, const Mat2& x) const;
    int apply(const Psl2Aut& a, int x) const { return S_.index_of(apply_mat(a, S_.mat(x))); }

    // The n*(q-1) outer normal forms sigma^i D^j for odd q; sigma powers only
    // when p = 2 (the diagonal automorphism is inner there).
    std::vector<Psl2Aut> outer_coset_reps() const;

    long fixed_point_count(const Psl2Aut& a) const;  // brute force over S
    long ad_image_size(const Psl2Aut& a) const;      // |{x^-1 * a(x)}|

    // p^(n/2) * (p^n - 1) / 2 as a double (integer when n is even).
    double outer_fixed_point_bound() const;

    std::uint64_t hash(const Psl2Aut& a) const {
        return hash_combine(hash_combine(static_cast<std::uint64_t>(a.inner), a.field_pow),
                            a.diag_pow);
    }

  private:
    const Psl2Group& S_;
    int n_;                 // field degree
    std::uint32_t qm1_;     // q - 1
    std::vector<std::uint64_t> shift_;  // shift_[i] = p^((n-i) mod n) mod (q-1)

    // sigma^i1 D^j1 o sigma^i2 D^j2 in normal form.
    std::pair<int, std::uint32_t> outer_compose(int i1, std::uint32_t j1, int i2,
                                                std::uint32_t j2) const;
};

}  // namespace wordgap
