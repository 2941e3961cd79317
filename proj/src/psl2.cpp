#include "wordgap/psl2.hpp"

#include "wordgap/errors.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace wordgap {
namespace {

std::uint64_t mat_key(const Mat2& m) {
    return (static_cast<std::uint64_t>(m.a) << 48) | (static_cast<std::uint64_t>(m.b) << 32) |
           (static_cast<std::uint64_t>(m.c) << 16) | m.d;
}

bool mat_less(const Mat2& x, const Mat2& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    if (x.c != y.c) return x.c < y.c;
    return x.d < y.d;
}

}  // namespace

Psl2Group::Psl2Group(std::uint32_t q) : F_(Fq::of_order(q)) {
    // Enumerate SL_2(q): for a != 0 pick (a, b, c) freely and solve for d;
    // for a = 0 require bc = -1.
    const std::uint32_t one = 1;
    std::vector<Mat2> raw;
    raw.reserve(static_cast<std::size_t>(q) * q * q);
    for (std::uint32_t a = 1; a < q; ++a) {
        const std::uint32_t ainv = F_.inv(a);
        for (std::uint32_t b = 0; b < q; ++b)
            for (std::uint32_t c = 0; c < q; ++c) {
                const std::uint32_t d = F_.mul(ainv, F_.add(one, F_.mul(b, c)));
                raw.push_back({a, b, c, d});
            }
    }
    for (std::uint32_t b = 1; b < q; ++b) {
        const std::uint32_t c = F_.neg(F_.inv(b));
        for (std::uint32_t d = 0; d < q; ++d) raw.push_back({0, b, c, d});
    }

    std::unordered_set<std::uint64_t> seen;
    for (const Mat2& m : raw) {
        const Mat2 cm = canonical(m);
        if (seen.insert(mat_key(cm)).second) elems_.push_back(cm);
    }
    std::sort(elems_.begin(), elems_.end(), mat_less);
    for (std::size_t i = 0; i < elems_.size(); ++i)
        index_[mat_key(elems_[i])].push_back(static_cast<int>(i));
    identity_ = index_of({1, 0, 0, 1});
}

Mat2 Psl2Group::canonical(Mat2 m) const {
    if (F_.p() == 2) return m;
    std::uint32_t lead = m.a ? m.a : m.b ? m.b : m.c ? m.c : m.d;
    if (F_.neg(lead) < lead) return {F_.neg(m.a), F_.neg(m.b), F_.neg(m.c), F_.neg(m.d)};
    return m;
}

int Psl2Group::index_of(const Mat2& m) const {
    const Mat2 cm = canonical(m);
    auto it = index_.find(mat_key(cm));
    if (it != index_.end())
        for (int idx : it->second)
            if (elems_[static_cast<std::size_t>(idx)] == cm) return idx;
    throw ContractError("matrix is not an element of PSL2(" + std::to_string(q()) + ")");
}

Mat2 Psl2Group::mat_mul(const Mat2& x, const Mat2& y) const {
    return {F_.add(F_.mul(x.a, y.a), F_.mul(x.b, y.c)),
            F_.add(F_.mul(x.a, y.b), F_.mul(x.b, y.d)),
            F_.add(F_.mul(x.c, y.a), F_.mul(x.d, y.c)),
            F_.add(F_.mul(x.c, y.b), F_.mul(x.d, y.d))};
}

Mat2 Psl2Group::mat_inv(const Mat2& x) const { return {x.d, F_.neg(x.b), F_.neg(x.c), x.a}; }

std::uint32_t Psl2Group::det(const Mat2& x) const {
    return F_.sub(F_.mul(x.a, x.d), F_.mul(x.b, x.c));
}

// --------------------------------------------------------------- Psl2AutGroup

Psl2AutGroup::Psl2AutGroup(const Psl2Group& S)
    : S_(S), n_(S.field().degree()), qm1_(S.q() - 1) {
    shift_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        std::uint64_t e = 1;
        const int k = (n_ - i) % n_;
        for (int t = 0; t < k; ++t) e = (e * S_.field().p()) % qm1_;
        shift_[static_cast<std::size_t>(i)] = e % qm1_;
    }
}

Psl2Aut Psl2AutGroup::diagonal() const {
    if (S_.field().p() == 2)
        throw ContractError("the diagonal automorphism is inner for even q");
    return {S_.identity(), 0, 1 % static_cast<int>(qm1_)};
}

Psl2Aut Psl2AutGroup::outer(int i, int j) const {
    return {S_.identity(), ((i % n_) + n_) % n_,
            static_cast<int>(((j % static_cast<int>(qm1_)) + qm1_) % qm1_)};
}

std::pair<int, std::uint32_t> Psl2AutGroup::outer_compose(int i1, std::uint32_t j1, int i2,
                                                          std::uint32_t j2) const {
    // sigma^i1 D^j1 o sigma^i2 D^j2 = sigma^(i1+i2) D^(j1 * p^((n-i2) mod n) + j2).
    const int i = (i1 + i2) % n_;
    const std::uint32_t j =
        static_cast<std::uint32_t>((j1 * shift_[static_cast<std::size_t>(i2 % n_)] + j2) % qm1_);
    return {i, j};
}

Psl2Aut Psl2AutGroup::compose(const Psl2Aut& x, const Psl2Aut& y) const {
    // inn(m1) phi1 o inn(m2) phi2 = inn(m1 * phi1(m2)) (phi1 o phi2).
    const Psl2Aut phi1 = outer(x.field_pow, x.diag_pow);
    const Mat2 moved = apply_mat(phi1, S_.mat(y.inner));
    const int m = S_.index_of(S_.mat_mul(S_.mat(x.inner), moved));
    const auto [i, j] = outer_compose(x.field_pow, static_cast<std::uint32_t>(x.diag_pow),
                                      y.field_pow, static_cast<std::uint32_t>(y.diag_pow));
    return {m, i, static_cast<int>(j)};
}

Psl2Aut Psl2AutGroup::inverse(const Psl2Aut& x) const {
    // (inn(m) sigma^i D^j)^-1 = inn(phi^-1(m^-1)) sigma^(n-i) D^(-j p^i).
    const int i_inv = (n_ - x.field_pow) % n_;
    std::uint64_t pi = 1;
    for (int t = 0; t < x.field_pow % n_; ++t) pi = (pi * S_.field().p()) % qm1_;
    const std::uint32_t j_inv = static_cast<std::uint32_t>(
        (qm1_ - (static_cast<std::uint64_t>(x.diag_pow) * pi) % qm1_) % qm1_);
    const Psl2Aut phi_inv = outer(i_inv, static_cast<int>(j_inv));
    const int m = S_.index_of(apply_mat(phi_inv, S_.mat_inv(S_.mat(x.inner))));
    return {m, i_inv, static_cast<int>(j_inv)};
}

Mat2 Psl2AutGroup::apply_mat(const Psl2Aut& a, const Mat2& x) const {
    const Fq& F = S_.field();
    // D^j: conjugation by diag(omega^j, 1).
    const std::uint32_t wj = F.pow(F.omega(), static_cast<std::uint64_t>(a.diag_pow));
    Mat2 y{x.a, F.mul(wj, x.b), F.mul(F.inv(wj), x.c), x.d};
    // sigma^i: entrywise p^i-th power.
    y = {F.frob(y.a, a.field_pow), F.frob(y.b, a.field_pow), F.frob(y.c, a.field_pow),
         F.frob(y.d, a.field_pow)};
    const Mat2& m = S_.mat(a.inner);
    return S_.canonical(S_.mat_mul(S_.mat_mul(m, y), S_.mat_inv(m)));
}

std::vector<Psl2Aut> Psl2AutGroup::outer_coset_reps() const {
    std::vector<Psl2Aut> reps;
    if (S_.field().p() == 2) {
        for (int i = 0; i < n_; ++i) reps.push_back(outer(i, 0));
        return reps;
    }
    for (int i = 0; i < n_; ++i)
        for (std::uint32_t j = 0; j < qm1_; ++j) reps.push_back(outer(i, static_cast<int>(j)));
    return reps;
}

long Psl2AutGroup::fixed_point_count(const Psl2Aut& a) const {
    long fixed = 0;
    for (int x = 0; x < S_.order(); ++x)
        if (apply_mat(a, S_.mat(x)) == S_.mat(x)) ++fixed;
    return fixed;
}

long Psl2AutGroup::ad_image_size(const Psl2Aut& a) const {
    std::unordered_set<std::uint64_t> image;
    for (int x = 0; x < S_.order(); ++x) {
        const Mat2 v = S_.canonical(S_.mat_mul(S_.mat_inv(S_.mat(x)), apply_mat(a, S_.mat(x))));
        image.insert(mat_key(v));
    }
    return static_cast<long>(image.size());
}

double Psl2AutGroup::outer_fixed_point_bound() const {
    const double p = S_.field().p();
    return std::pow(p, n_ / 2.0) * (S_.q() - 1) / 2.0;
}

}  // namespace wordgap
