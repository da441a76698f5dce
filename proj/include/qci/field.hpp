#pragma once

#include <cstdint>
#include <optional>

#include "qci/errors.hpp"

namespace qci {

/// Arithmetic in the prime field F_p. Residues are uint32_t values in [0, p).
/// The modulus is capped at 2^31 - 1 so every product fits a 64-bit
/// intermediate.
class Fp {
public:
    /// Placeholder field F_2; factories always overwrite it.
    Fp() : p_(2) {}
    /// Validates that p is prime and within the cap.
    explicit Fp(uint32_t p);

    uint32_t p() const { return p_; }

    uint32_t add(uint32_t x, uint32_t y) const {
        uint64_t s = uint64_t(x) + y;
        return s >= p_ ? uint32_t(s - p_) : uint32_t(s);
    }
    uint32_t sub(uint32_t x, uint32_t y) const {
        return x >= y ? x - y : uint32_t(uint64_t(x) + p_ - y);
    }
    uint32_t neg(uint32_t x) const { return x == 0 ? 0 : p_ - x; }
    uint32_t mul(uint32_t x, uint32_t y) const {
        return uint32_t((uint64_t(x) * y) % p_);
    }
    /// Multiplicative inverse; throws DivisionByZeroError on 0.
    uint32_t inv(uint32_t x) const;
    uint32_t pow(uint32_t base, uint64_t exp) const;

    /// Reduces an arbitrary signed integer into [0, p).
    uint32_t reduce(int64_t v) const {
        int64_t r = v % int64_t(p_);
        return uint32_t(r < 0 ? r + p_ : r);
    }

    bool operator==(const Fp& other) const = default;

private:
    uint32_t p_;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs used here.
bool is_prime(uint64_t n);

/// Order of x in the multiplicative group F_p^*; x must be nonzero.
uint64_t multiplicative_order(const Fp& field, uint32_t x);

/// a / gcd(a, p): the order q must have once the truncation exponent a is
/// read in characteristic p.
uint32_t derive_a_bar(uint32_t a, uint32_t p);

/// Smallest residue of multiplicative order exactly a_bar. Throws
/// NoSuchRootError when a_bar does not divide p - 1.
uint32_t find_primitive_root(uint32_t a_bar, const Fp& field);

/// A prime field together with the designated root of unity q: q has
/// multiplicative order exactly a_bar = a / gcd(a, p).
struct FieldSpec {
    Fp field;
    uint32_t a = 0;
    uint32_t a_bar = 0;
    uint32_t q = 0;

    /// Derives a_bar and picks q (smallest suitable residue) unless an
    /// override is supplied, in which case its order is checked.
    static FieldSpec create(uint32_t p, uint32_t a,
                            std::optional<uint32_t> q_override = std::nullopt);

    uint32_t p() const { return field.p(); }
    bool operator==(const FieldSpec& other) const = default;
};

} // namespace qci
