#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pident {

// Scalar helpers for arithmetic in F_p with p < 2^31.

inline constexpr std::uint32_t kDefaultPrime = 101;

[[nodiscard]] constexpr std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}

[[nodiscard]] constexpr std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

[[nodiscard]] constexpr std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

[[nodiscard]] constexpr std::uint32_t neg_mod(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

[[nodiscard]] constexpr std::uint32_t reduce_signed(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

/// Representative of a in (-p/2, p/2].
[[nodiscard]] constexpr std::int64_t symmetric(std::uint32_t a, std::uint32_t p) {
    return a > p / 2 ? static_cast<std::int64_t>(a) - p : static_cast<std::int64_t>(a);
}

[[nodiscard]] constexpr std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t result = 1 % p;
    std::uint64_t base = a % p;
    while (e != 0) {
        if (e & 1U) {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1U;
    }
    return static_cast<std::uint32_t>(result);
}

/// Inverse of a nonzero residue modulo a prime.
[[nodiscard]] inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) {
        throw std::domain_error("zero has no inverse mod p");
    }
    std::int64_t t = 0;
    std::int64_t new_t = 1;
    std::int64_t r = p;
    std::int64_t new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

[[nodiscard]] constexpr bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

/// Throws std::invalid_argument unless p is a prime below 2^31.
inline void require_prime(std::uint64_t p) {
    if (!is_prime(p) || p >= (1ULL << 31)) {
        throw std::invalid_argument("modulus must be a prime below 2^31, got " + std::to_string(p));
    }
}

}  // namespace pident
