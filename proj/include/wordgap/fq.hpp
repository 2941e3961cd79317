#pragma once

#include <cstdint>
#include <vector>

namespace wordgap {

// Arithmetic in F_{p^n}, p^n <= 2^16. Elements are encoded as integers in
// [0, q): the value sum c_i * p^i stands for the polynomial sum c_i * x^i
// modulo a fixed monic irreducible of degree n. The modulus is the
// lexicographically smallest monic irreducible (coefficients compared from
// the highest degree down), so representations are reproducible without
// external polynomial tables.
class Fq {
  public:
    Fq(int p, int n);

    // Factors q and delegates to Fq(p, n); rejects non prime powers.
    static Fq of_order(std::uint32_t q);

    int p() const { return p_; }
    int degree() const { return n_; }
    std::uint32_t q() const { return q_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    // x -> x^(p^i), the i-th power of the Frobenius map.
    std::uint32_t frob(std::uint32_t a, int i = 1) const;

    // Least primitive element of F_q^x under the value ordering.
    std::uint32_t omega() const { return omega_; }

    std::uint64_t mul_order(std::uint32_t a) const;

    // Modulus coefficients c_0..c_n (c_n = 1).
    const std::vector<int>& modulus() const { return modulus_; }

  private:
    int p_, n_;
    std::uint32_t q_;
    std::vector<int> modulus_;
    std::uint32_t omega_ = 1;
    std::vector<std::uint32_t> exp_;  // omega^k, k in [0, q-1)
    std::vector<std::uint32_t> log_;  // inverse of exp_ on F_q^x

    std::uint32_t raw_mul(std::uint32_t a, std::uint32_t b) const;
    void build_tables();
};

}  // namespace wordgap
