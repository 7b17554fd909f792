/*
   Copyright 2026 The fourcirc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FOURCIRC_NUMTHEORY_HPP
#define FOURCIRC_NUMTHEORY_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace fourcirc {

inline bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Distinct prime divisors in increasing order (trial division).
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Order of q in (Z/nZ)^*. Requires gcd(q, n) = 1 and n >= 1.
inline std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t n) {
    if (n == 0 || std::gcd(q, n) != 1) throw ValidationError("multiplicative order needs gcd(q, n) = 1");
    if (n == 1) return 1;
    // the order divides lambda(n) | phi(n); shrink phi(n) prime by prime
    std::uint64_t phi = n;
    for (auto r : prime_divisors(n)) phi = phi / r * (r - 1);
    std::uint64_t order = phi;
    for (auto r : prime_divisors(phi)) {
        while (order % r == 0 && powmod(q, order / r, n) == 1) order /= r;
    }
    return order;
}

/// q is a primitive root modulo the odd prime n.
inline bool is_primitive_root(std::uint64_t q, std::uint64_t n) {
    if (!is_prime(n) || n == 2 || q % n == 0) return false;
    return multiplicative_order(q, n) == n - 1;
}

/// Splits q = p^k with p prime; nullopt if q is not a prime power.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> as_prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    auto ps = prime_divisors(q);
    if (ps.size() != 1) return std::nullopt;
    std::uint32_t k = 0;
    while (q > 1) {
        q /= ps[0];
        ++k;
    }
    return std::pair{static_cast<std::uint32_t>(ps[0]), k};
}

inline bool is_perfect_square(std::uint64_t q) noexcept {
    std::uint64_t r = 0;
    while ((r + 1) * (r + 1) <= q) ++r;
    return r * r == q;
}

/// Primes up to limit inclusive (Eratosthenes).
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

/// Checked integer power; throws if the result does not fit in 64 bits.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) throw ValidationError("integer power overflows 64 bits");
        r *= base;
    }
    return r;
}

}  // namespace fourcirc

#endif
