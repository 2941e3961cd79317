#include "wordgap/fq.hpp"

#include "wordgap/errors.hpp"

#include <algorithm>

namespace wordgap {
namespace {

bool is_prime(int m) {
    if (m < 2) return false;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

std::vector<int> digits_of(std::uint32_t v, int p, int len) {
    std::vector<int> d(len, 0);
    for (int i = 0; i < len && v; ++i) {
        d[i] = static_cast<int>(v % p);
        v /= p;
    }
    return d;
}

// Remainder of a by b over F_p; b monic.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    const int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        const int c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) {
            int& t = a[i - db + j];
            t = (t - c * b[j]) % p;
            if (t < 0) t += p;
        }
    }
    a.resize(db);
    return a;
}

bool poly_is_zero(const std::vector<int>& a) {
    return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

// f monic of degree n >= 1; trial division by every monic divisor candidate
// of degree 1..n/2.
bool poly_irreducible(const std::vector<int>& f, int p) {
    const int n = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= n; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::uint64_t k = 0; k < count; ++k) {
            std::vector<int> g = digits_of(static_cast<std::uint32_t>(k), p, d);
            g.push_back(1);
            if (poly_is_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

}  // namespace

Fq::Fq(int p, int n) : p_(p), n_(n) {
    if (!is_prime(p)) throw ContractError("field characteristic must be prime, got " + std::to_string(p));
    if (n < 1) throw ContractError("field degree must be positive");
    std::uint64_t q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        if (q > (1u << 16)) throw ContractError("field order exceeds 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);

    // Scan k ascending: k encodes the non-leading coefficients base p, so the
    // order is lexicographic from the x^(n-1) coefficient down.
    for (std::uint32_t k = 0;; ++k) {
        std::vector<int> f = digits_of(k, p, n);
        f.push_back(1);
        if (poly_irreducible(f, p)) {
            modulus_ = std::move(f);
            break;
        }
        if (k == q_ - 1) throw InternalCheckError("no irreducible modulus found");
    }
    build_tables();
}

Fq Fq::of_order(std::uint32_t q) {
    if (q < 2) throw ContractError("field order must be at least 2");
    for (int p = 2; static_cast<std::uint32_t>(p) <= q; ++p) {
        if (q % p == 0) {
            int n = 0;
            std::uint32_t m = q;
            while (m % p == 0) {
                m /= p;
                ++n;
            }
            if (m != 1) throw ContractError(std::to_string(q) + " is not a prime power");
            return Fq(p, n);
        }
    }
    throw ContractError(std::to_string(q) + " is not a prime power");
}

std::uint32_t Fq::add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0, mult = 1;
    for (int i = 0; i < n_; ++i) {
        r += mult * ((a + b) % p_);
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

std::uint32_t Fq::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Fq::neg(std::uint32_t a) const {
    std::uint32_t r = 0, mult = 1;
    for (int i = 0; i < n_; ++i) {
        r += mult * ((p_ - a % p_) % p_);
        a /= p_;
        mult *= p_;
    }
    return r;
}

std::uint32_t Fq::raw_mul(std::uint32_t a, std::uint32_t b) const {
    std::vector<int> da = digits_of(a, p_, n_), db = digits_of(b, p_, n_);
    std::vector<int> prod(2 * n_ - 1, 0);
    for (int i = 0; i < n_; ++i) {
        if (da[i] == 0) continue;
        for (int j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    std::vector<int> r = poly_mod(std::move(prod), modulus_, p_);
    std::uint32_t v = 0, mult = 1;
    for (int i = 0; i < n_; ++i) {
        v += mult * r[i];
        mult *= p_;
    }
    return v;
}

std::uint32_t Fq::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

std::uint32_t Fq::inv(std::uint32_t a) const {
    if (a == 0) throw ContractError("division by zero in F_q");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t Fq::pow(std::uint32_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
}

std::uint32_t Fq::frob(std::uint32_t a, int i) const {
    std::uint64_t e = 1;
    i %= n_;
    if (i < 0) i += n_;
    for (int k = 0; k < i; ++k) e = (e * p_) % (q_ - 1 == 0 ? 1 : q_ - 1);
    if (q_ == 2) return a;
    return pow(a, e == 0 ? q_ - 1 : e);
}

std::uint64_t Fq::mul_order(std::uint32_t a) const {
    if (a == 0) throw ContractError("0 has no multiplicative order");
    std::uint64_t ord = 1;
    std::uint32_t x = a;
    while (x != 1) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

void Fq::build_tables() {
    // Find the least primitive element by raw polynomial arithmetic, then
    // freeze exp/log tables relative to it.
    for (std::uint32_t cand = 1; cand < q_; ++cand) {
        std::uint64_t ord = 1;
        std::uint32_t x = cand;
        while (x != 1) {
            x = raw_mul(x, cand);
            ++ord;
        }
        if (ord == q_ - 1) {
            omega_ = cand;
            break;
        }
    }
    exp_.assign(q_ - 1, 1);
    log_.assign(q_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
        exp_[k] = x;
        log_[x] = k;
        x = raw_mul(x, omega_);
    }
}

}  // namespace wordgap
