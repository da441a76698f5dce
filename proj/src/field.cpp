#include "qci/field.hpp"

#include <numeric>
#include <string>

namespace qci {

namespace {

constexpr uint32_t kModulusCap = 0x7fffffffu; // 2^31 - 1

uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m) {
    return (unsigned __int128)(a) * b % m;
}

uint64_t powmod64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod64(r, base, m);
        base = mulmod64(base, base, m);
        exp >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses decide primality for all n < 3.3 * 10^24.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                       23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Fp::Fp(uint32_t p) : p_(p) {
    if (p > kModulusCap)
        throw PreconditionError("modulus " + std::to_string(p) +
                                " exceeds the 2^31 - 1 cap");
    if (!is_prime(p))
        throw PreconditionError("modulus " + std::to_string(p) + " is not prime");
}

uint32_t Fp::inv(uint32_t x) const {
    if (x == 0) throw DivisionByZeroError("inverse of 0 is undefined");
    // Extended Euclid on (x, p).
    int64_t t = 0, new_t = 1;
    int64_t r = p_, new_r = x % p_;
    while (new_r != 0) {
        int64_t qq = r / new_r;
        t -= qq * new_t;
        std::swap(t, new_t);
        r -= qq * new_r;
        std::swap(r, new_r);
    }
    return reduce(t);
}

uint32_t Fp::pow(uint32_t base, uint64_t exp) const {
    return uint32_t(powmod64(base % p_, exp, p_));
}

uint64_t multiplicative_order(const Fp& field, uint32_t x) {
    if (x % field.p() == 0)
        throw DivisionByZeroError("order of 0 is undefined");
    uint64_t group = field.p() - 1;
    // order divides p - 1: start there and strip prime factors while the
    // power stays 1.
    uint64_t order = group;
    uint64_t m = group;
    for (uint64_t f = 2; f * f <= m; ++f) {
        while (m % f == 0) {
            m /= f;
            while (order % f == 0 && field.pow(x, order / f) == 1) order /= f;
        }
    }
    if (m > 1) {
        while (order % m == 0 && field.pow(x, order / m) == 1) order /= m;
    }
    return order;
}

uint32_t derive_a_bar(uint32_t a, uint32_t p) {
    if (a < 2) throw PreconditionError("truncation exponent a must be >= 2");
    return a / std::gcd(a, p);
}

uint32_t find_primitive_root(uint32_t a_bar, const Fp& field) {
    if (a_bar == 0 || (field.p() - 1) % a_bar != 0)
        throw NoSuchRootError("no element of order " + std::to_string(a_bar) +
                              " in F_" + std::to_string(field.p()) +
                              ": " + std::to_string(a_bar) + " does not divide p - 1 = " +
                              std::to_string(field.p() - 1));
    for (uint32_t x = 1; x < field.p(); ++x) {
        if (multiplicative_order(field, x) == a_bar) return x;
    }
    throw ComputationError("primitive root scan exhausted F_p");
}

FieldSpec FieldSpec::create(uint32_t p, uint32_t a,
                            std::optional<uint32_t> q_override) {
    Fp field(p);
    if (a < 2) throw PreconditionError("truncation exponent a must be >= 2");
    uint32_t a_bar = derive_a_bar(a, p);
    uint32_t q;
    if (q_override) {
        q = *q_override % p;
        if (q == 0 || multiplicative_order(field, q) != a_bar)
            throw PreconditionError(
                "q override " + std::to_string(*q_override) +
                " does not have multiplicative order a_bar = " +
                std::to_string(a_bar));
    } else {
        q = find_primitive_root(a_bar, field);
    }
    return FieldSpec{field, a, a_bar, q};
}

} // namespace qci
