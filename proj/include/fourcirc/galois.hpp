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

#ifndef FOURCIRC_GALOIS_HPP
#define FOURCIRC_GALOIS_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numtheory.hpp"

namespace fourcirc {

/// Element of F_{p^k}. The value packs the coordinate vector over F_p in the
/// power basis of the modulus root y: value = sum_i c_i p^i, c_i in [0, p).
/// Prime-field elements are just their residues.
struct FieldElem {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;

/// Largest supported field order.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

namespace detail {

// Dense polynomials over F_p, ascending coefficients, used only while a field
// is being constructed.
using PrimePoly = std::vector<std::uint32_t>;

inline void trim(PrimePoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline PrimePoly prime_poly_mod(PrimePoly f, const PrimePoly& g, std::uint32_t p) {
    // g monic
    trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        const std::uint32_t lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = (f[shift + i] + (p - lead) * g[i]) % p;
        trim(f);
    }
    return f;
}

inline PrimePoly monic_from_index(std::uint64_t index, std::uint32_t degree, std::uint32_t p) {
    PrimePoly f(degree + 1, 0);
    for (std::uint32_t i = 0; i < degree; ++i) {
        f[i] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    f[degree] = 1;
    return f;
}

/// Trial division by every monic polynomial of degree 1..deg(f)/2.
inline bool is_irreducible_over_prime(const PrimePoly& f, std::uint32_t p) {
    const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
    if (deg < 1) return false;
    for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
        const std::uint64_t count = checked_pow(p, d);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            if (prime_poly_mod(f, monic_from_index(idx, d, p), p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Finite field F_q, q = p^k <= 2^16, with log/antilog tables built once at
/// construction. Immutable afterwards and shared through FieldPtr.
class GaloisField {
    struct Token {};

   public:
    /// Builds F_{p^k}. Without a modulus (and k > 1) the numerically least
    /// monic irreducible of degree k is used, where a modulus y^k + sum c_i y^i
    /// is ordered by sum c_i p^i.
    static FieldPtr make(std::uint32_t p, std::uint32_t k = 1,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
        return std::make_shared<const GaloisField>(Token{}, p, k, std::move(modulus));
    }

    GaloisField(Token, std::uint32_t p, std::uint32_t k, std::optional<std::vector<std::uint32_t>> modulus)
        : p_(p), k_(k) {
        if (!is_prime(p)) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
        if (k < 1) throw ValidationError("extension degree must be at least 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < k; ++i) {
            q *= p;
            if (q > kMaxFieldOrder)
                throw ValidationError("field order " + std::to_string(p) + "^" + std::to_string(k) +
                                      " exceeds the supported maximum 2^16");
        }
        q_ = static_cast<std::uint32_t>(q);
        set_modulus(std::move(modulus));
        build_tables();
    }

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t k() const noexcept { return k_; }
    std::uint32_t q() const noexcept { return q_; }
    /// Ascending coefficients of the modulus (length k + 1); empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    std::string label() const { return k_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^" + std::to_string(k_); }

    FieldElem zero() const noexcept { return {0}; }
    FieldElem one() const noexcept { return {1}; }
    FieldElem primitive_element() const noexcept { return {exp_[1 % exp_.size()]}; }

    FieldElem element(std::uint64_t value) const {
        if (value >= q_) throw ValidationError("field element " + std::to_string(value) + " out of range for F_" + label());
        return {static_cast<std::uint32_t>(value)};
    }

    /// Image of an integer in the prime subfield.
    FieldElem from_int(std::int64_t v) const noexcept {
        const auto p = static_cast<std::int64_t>(p_);
        return {static_cast<std::uint32_t>(((v % p) + p) % p)};
    }

    std::vector<std::uint32_t> coeffs(FieldElem x) const {
        std::vector<std::uint32_t> c(k_);
        for (auto& ci : c) {
            ci = x.value % p_;
            x.value /= p_;
        }
        return c;
    }

    FieldElem from_coeffs(std::span<const std::uint32_t> c) const {
        if (c.size() > k_) throw ValidationError("too many coordinates for F_" + label());
        std::uint32_t v = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] >= p_) throw ValidationError("coordinate out of range for F_" + label());
            v = v * p_ + c[i];
        }
        return {v};
    }

    FieldElem add(FieldElem a, FieldElem b) const noexcept {
        if (k_ == 1) {
            const std::uint32_t s = a.value + b.value;
            return {s >= p_ ? s - p_ : s};
        }
        if (p_ == 2) return {a.value ^ b.value};
        if (!add_table_.empty()) return {add_table_[a.value * q_ + b.value]};
        return add_digits(a, b);
    }
    FieldElem neg(FieldElem a) const noexcept { return {neg_[a.value]}; }
    FieldElem sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }

    FieldElem mul(FieldElem a, FieldElem b) const noexcept {
        if (a.value == 0 || b.value == 0) return {0};
        return {exp_[log_[a.value] + log_[b.value]]};
    }

    FieldElem inv(FieldElem a) const {
        if (a.value == 0) throw std::domain_error("inverse of zero in F_" + label());
        return {exp_[(q_ - 1 - log_[a.value]) % (q_ - 1)]};
    }
    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

    FieldElem pow(FieldElem a, std::uint64_t e) const noexcept {
        if (a.value == 0) return {e == 0 ? 1u : 0u};
        const std::uint64_t order = q_ - 1;
        return {exp_[mulmod(log_[a.value], e % order, order)]};
    }

    /// x -> x^(p^e); frobenius(x, k) = x and frobenius(x, k * m / k') is the
    /// q'^m conjugation for any subfield F_{q'} with q' = p^{k'}.
    FieldElem frobenius(FieldElem a, std::uint64_t e) const noexcept {
        if (a.value == 0) return a;
        const std::uint64_t order = q_ - 1;
        return {exp_[mulmod(log_[a.value], powmod(p_, e, order), order)]};
    }

    /// Quadratic character: +1 on nonzero squares, -1 on nonsquares, 0 at 0.
    int quad_char(FieldElem a) const {
        if (p_ == 2) throw ValidationError("quadratic character is defined for odd q only");
        if (a.value == 0) return 0;
        return log_[a.value] % 2 == 0 ? 1 : -1;
    }

    /// Discrete log base primitive_element(); a must be nonzero.
    std::uint32_t log(FieldElem a) const {
        if (a.value == 0) throw std::domain_error("log of zero");
        return log_[a.value];
    }

   private:
    std::uint32_t p_;
    std::uint32_t k_;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;  // doubled so exp_[log a + log b] needs no reduction
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint16_t> add_table_;

    void set_modulus(std::optional<std::vector<std::uint32_t>> modulus) {
        if (k_ == 1) {
            if (modulus && !modulus->empty() && !(modulus->size() == 2 && (*modulus)[1] == 1))
                throw ValidationError("prime field modulus must be empty or a monic linear polynomial");
            return;
        }
        if (modulus) {
            auto& m = *modulus;
            if (m.size() != k_ + 1 || m.back() != 1)
                throw ValidationError("modulus must be monic of degree " + std::to_string(k_));
            for (auto c : m)
                if (c >= p_) throw ValidationError("modulus coefficient out of range");
            if (!detail::is_irreducible_over_prime(m, p_)) throw ValidationError("modulus is reducible over F_" + std::to_string(p_));
            modulus_ = std::move(m);
            return;
        }
        const std::uint64_t count = checked_pow(p_, k_);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            auto f = detail::monic_from_index(idx, k_, p_);
            if (detail::is_irreducible_over_prime(f, p_)) {
                modulus_ = std::move(f);
                return;
            }
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    FieldElem add_digits(FieldElem a, FieldElem b) const noexcept {
        std::uint32_t out = 0, scale = 1;
        for (std::uint32_t i = 0; i < k_; ++i) {
            out += ((a.value % p_ + b.value % p_) % p_) * scale;
            a.value /= p_;
            b.value /= p_;
            scale *= p_;
        }
        return {out};
    }

    // Schoolbook product modulo the modulus; only used to build the tables.
    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
        if (k_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
        const auto ca = coeffs({a}), cb = coeffs({b});
        detail::PrimePoly prod(2 * k_ - 1, 0);
        for (std::uint32_t i = 0; i < k_; ++i)
            for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
        auto r = detail::prime_poly_mod(std::move(prod), modulus_, p_);
        r.resize(k_, 0);
        return from_coeffs(r).value;
    }

    std::uint32_t slow_pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    }

    void build_tables() {
        neg_.resize(q_);
        for (std::uint32_t v = 0; v < q_; ++v) {
            std::uint32_t out = 0, scale = 1, x = v;
            for (std::uint32_t i = 0; i < k_; ++i) {
                out += ((p_ - x % p_) % p_) * scale;
                x /= p_;
                scale *= p_;
            }
            neg_[v] = out;
        }
        if (k_ > 1 && p_ != 2 && q_ <= 256) {
            add_table_.resize(std::size_t{q_} * q_);
            for (std::uint32_t a = 0; a < q_; ++a)
                for (std::uint32_t b = 0; b < q_; ++b)
                    add_table_[a * q_ + b] = static_cast<std::uint16_t>(add_digits({a}, {b}).value);
        }

        const std::uint32_t order = q_ - 1;
        const auto divisors = prime_divisors(order);
        std::uint32_t gen = 0;
        for (std::uint32_t g = 1; g < q_ && gen == 0; ++g) {
            bool primitive = true;
            for (auto r : divisors)
                if (slow_pow(g, order / r) == 1) {
                    primitive = false;
                    break;
                }
            if (primitive) gen = g;
        }
        if (gen == 0) throw std::logic_error("no primitive element; modulus is not irreducible");

        exp_.assign(2 * std::size_t{order}, 0);
        log_.assign(q_, 0);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < order; ++i) {
            exp_[i] = exp_[i + order] = x;
            log_[x] = i;
            x = slow_mul(x, gen);
        }
    }
};

/// Field homomorphism F_{p^k} -> F_{p^K} for k | K, fixed by sending the
/// source modulus root to the first root of the source modulus in the target.
class FieldEmbedding {
   public:
    FieldEmbedding(FieldPtr source, FieldPtr target) : source_(std::move(source)), target_(std::move(target)) {
        if (source_->p() != target_->p() || target_->k() % source_->k() != 0)
            throw ValidationError("F_" + source_->label() + " does not embed in F_" + target_->label());
        const auto& tgt = *target_;
        FieldElem root = tgt.zero();
        if (source_->k() > 1) {
            bool found = false;
            for (std::uint32_t v = 0; v < tgt.q() && !found; ++v) {
                FieldElem acc = tgt.zero();
                const auto& m = source_->modulus();
                for (std::size_t i = m.size(); i-- > 0;) acc = tgt.add(tgt.mul(acc, {v}), tgt.from_int(m[i]));
                if (acc.value == 0) {
                    root = {v};
                    found = true;
                }
            }
            if (!found) throw std::logic_error("source modulus has no root in target field");
        }
        image_.resize(source_->q());
        preimage_.assign(tgt.q(), -1);
        for (std::uint32_t v = 0; v < source_->q(); ++v) {
            const auto c = source_->coeffs({v});
            FieldElem acc = tgt.zero();
            for (std::size_t i = c.size(); i-- > 0;) acc = tgt.add(tgt.mul(acc, root), tgt.from_int(c[i]));
            image_[v] = acc;
            preimage_[acc.value] = static_cast<std::int32_t>(v);
        }
    }

    const FieldPtr& source() const noexcept { return source_; }
    const FieldPtr& target() const noexcept { return target_; }

    FieldElem operator()(FieldElem x) const noexcept { return image_[x.value]; }

    /// Inverse image when y lies in the embedded subfield.
    std::optional<FieldElem> preimage(FieldElem y) const noexcept {
        const auto v = preimage_[y.value];
        if (v < 0) return std::nullopt;
        return FieldElem{static_cast<std::uint32_t>(v)};
    }

   private:
    FieldPtr source_;
    FieldPtr target_;
    std::vector<FieldElem> image_;
    std::vector<std::int32_t> preimage_;
};

}  // namespace fourcirc

#endif
