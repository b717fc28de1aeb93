#pragma once

#include <cstdint>
#include <vector>

namespace grassmann {

/// Finite field F_q with full operation tables. Elements are 0..q-1;
/// 0 and 1 are the additive and multiplicative identities. Prime fields
/// use residue arithmetic; F_4, F_8, F_9 use the irreducible polynomials
/// x^2+x+1, x^3+x+1, x^2+1 with elements indexed by packed coefficients.
class Field {
public:
    /// Shared immutable instance for q (cached). Supported: prime q <= 97
    /// and q in {4, 8, 9}.
    static const Field& get(long q);

    long q() const { return q_; }
    long characteristic() const { return p_; }
    long degree() const { return e_; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * q_ + neg_[b]]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t inv(uint8_t a) const;

private:
    explicit Field(long q);

    long q_, p_, e_;
    std::vector<uint8_t> add_, mul_, neg_, inv_;
};

}  // namespace grassmann
