#pragma once

#include <cstdint>
#include <vector>

namespace irsdec {

/// Arithmetic in GF(2^w), 2 <= w <= 16, backed by exp/log tables built from
/// the residue class of x (alpha = 2) modulo a primitive polynomial.
///
/// Elements are integers in [0, q). Addition is XOR. The tables are built by
/// repeated multiplication by x; construction throws if the multiplicative
/// cycle of alpha is shorter than q-1, so a non-primitive polynomial cannot
/// produce a usable Field.
///
/// Immutable after construction; all operations are pure and safe to call
/// concurrently from any number of threads.
class Field {
public:
    /// `primitive_poly` encodes the modulus bitwise (bit i = coefficient of
    /// x^i); it must have degree exactly `bits` and be primitive over GF(2).
    Field(int bits, uint32_t primitive_poly);

    /// The conventional Reed-Solomon field GF(2^8) with polynomial 0x11D.
    Field() : Field(8, 0x11D) {}

    int bits() const { return bits_; }
    uint32_t size() const { return q_; }
    uint32_t poly() const { return poly_; }
    uint16_t alpha() const { return 2; }

    uint16_t add(uint16_t a, uint16_t b) const { return a ^ b; }
    uint16_t sub(uint16_t a, uint16_t b) const { return a ^ b; }

    uint16_t mul(uint16_t a, uint16_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[static_cast<uint32_t>(log_[a]) + log_[b]];
    }

    /// Multiplicative inverse; throws std::domain_error on a = 0.
    uint16_t inv(uint16_t a) const;

    /// a / b; throws std::domain_error on b = 0.
    uint16_t div(uint16_t a, uint16_t b) const { return mul(a, inv(b)); }

    /// a^e with pow(0, 0) = 1 (empty product), pow(0, e) = 0 for e >= 1.
    uint16_t pow(uint16_t a, uint64_t e) const;

    /// alpha^i for any i >= 0.
    uint16_t exp(uint32_t i) const { return exp_[i % (q_ - 1)]; }

    /// Discrete log base alpha; throws std::domain_error on a = 0.
    int log(uint16_t a) const;

private:
    int bits_;
    uint32_t q_;
    uint32_t poly_;
    std::vector<uint16_t> exp_;  // doubled to 2(q-1) so mul needs no reduction
    std::vector<int32_t> log_;   // log_[0] = -1 sentinel
};

/// Conventional primitive polynomial for each supported extension degree
/// (e.g. 0x11D for w = 8). Throws on w outside [2, 16].
uint32_t default_primitive_poly(int bits);

/// GF(2^8) with polynomial 0x11D, the conventional Reed-Solomon field.
const Field& default_field();

}  // namespace irsdec
