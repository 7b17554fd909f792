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

#ifndef FOURCIRC_POLYRING_HPP
#define FOURCIRC_POLYRING_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "galois.hpp"

namespace fourcirc {

inline bool same_field(const GaloisField& a, const GaloisField& b) noexcept {
    return &a == &b || (a.p() == b.p() && a.k() == b.k() && a.modulus() == b.modulus());
}

inline void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!same_field(*a, *b)) throw ValidationError("operands live in different fields (F_" + a->label() + " vs F_" + b->label() + ")");
}

/// Polynomial over a finite field; coefficients ascending, never a trailing zero.
class Poly {
   public:
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<FieldElem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

    static Poly constant(FieldPtr field, FieldElem c) { return Poly(std::move(field), {c}); }
    static Poly monomial(FieldPtr field, std::size_t degree, FieldElem c) {
        std::vector<FieldElem> v(degree + 1, FieldElem{});
        v[degree] = c;
        return Poly(std::move(field), std::move(v));
    }
    /// x^n - 1
    static Poly x_n_minus_1(FieldPtr field, std::size_t n) {
        std::vector<FieldElem> v(n + 1, FieldElem{});
        v[0] = field->neg(field->one());
        v[n] = field->one();
        return Poly(std::move(field), std::move(v));
    }

    const FieldPtr& field() const noexcept { return field_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0].value == 1; }
    std::span<const FieldElem> coeffs() const noexcept { return c_; }
    FieldElem operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : FieldElem{}; }
    FieldElem leading() const noexcept { return c_.empty() ? FieldElem{} : c_.back(); }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(field_->inv(leading()));
    }

    Poly scaled(FieldElem s) const {
        std::vector<FieldElem> v(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->mul(c_[i], s);
        return Poly(field_, std::move(v));
    }

    FieldElem eval(FieldElem x) const noexcept {
        FieldElem acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
        return acc;
    }

    Poly operator-() const {
        std::vector<FieldElem> v(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->neg(c_[i]);
        return Poly(field_, std::move(v));
    }

    Poly& operator+=(const Poly& rhs) {
        require_same_field(field_, rhs.field_);
        if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] = field_->add(c_[i], rhs.c_[i]);
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& rhs) { return *this += -rhs; }

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs) {
        require_same_field(lhs.field_, rhs.field_);
        if (lhs.is_zero() || rhs.is_zero()) return Poly(lhs.field_);
        const auto& F = *lhs.field_;
        std::vector<FieldElem> v(lhs.c_.size() + rhs.c_.size() - 1);
        for (std::size_t i = 0; i < lhs.c_.size(); ++i)
            for (std::size_t j = 0; j < rhs.c_.size(); ++j) v[i + j] = F.add(v[i + j], F.mul(lhs.c_[i], rhs.c_[j]));
        return Poly(lhs.field_, std::move(v));
    }

    friend bool operator==(const Poly& lhs, const Poly& rhs) noexcept {
        return same_field(*lhs.field_, *rhs.field_) && lhs.c_ == rhs.c_;
    }

    /// Coefficient values as plain integers (packed field elements).
    std::vector<std::uint64_t> values() const {
        std::vector<std::uint64_t> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i].value;
        return out;
    }

   private:
    FieldPtr field_;
    std::vector<FieldElem> c_;

    void trim() {
        while (!c_.empty() && c_.back().value == 0) c_.pop_back();
    }
};

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

inline PolyDivision divmod(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const auto& F = *a.field();
    std::vector<FieldElem> rem(a.coeffs().begin(), a.coeffs().end());
    const int db = b.degree();
    const FieldElem lead_inv = F.inv(b.leading());
    std::vector<FieldElem> quo(std::max(0, a.degree() - db + 1));
    for (int i = a.degree(); i >= db; --i) {
        const FieldElem coef = F.mul(rem[i], lead_inv);
        quo[i - db] = coef;
        if (coef.value == 0) continue;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = F.sub(rem[i - db + j], F.mul(coef, b[j]));
    }
    return {Poly(a.field(), std::move(quo)), Poly(a.field(), std::move(rem))};
}

inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }
inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }

/// Monic gcd by Euclid; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

struct ExtendedGcd {
    Poly g;  // monic
    Poly s;
    Poly t;  // s*a + t*b = g
};

inline ExtendedGcd ext_gcd(const Poly& a, const Poly& b) {
    const auto& field = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(field, field->one()), s1(field);
    Poly t0(field), t1 = Poly::constant(field, field->one());
    while (!r1.is_zero()) {
        auto [quo, rem] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(rem));
        s0 = std::exchange(s1, s0 - quo * s1);
        t0 = std::exchange(t1, t0 - quo * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const FieldElem norm = field->inv(r0.leading());
    return {r0.scaled(norm), s0.scaled(norm), t0.scaled(norm)};
}

/// x^deg(f) f(1/x), normalised to be monic. f must have a nonzero constant term.
inline Poly monic_reciprocal(const Poly& f) {
    if (f.is_zero() || f[0].value == 0) throw ValidationError("reciprocal needs a nonzero constant term");
    std::vector<FieldElem> v(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly(f.field(), std::move(v)).monic();
}

/// Residue class in R(n, F_q) = F_q[x] / (x^n - 1), stored as exactly n coefficients.
class RingElem {
   public:
    RingElem(FieldPtr field, std::size_t n) : field_(std::move(field)), c_(n) {
        if (n == 0) throw ValidationError("ring length n must be positive");
    }
    RingElem(FieldPtr field, std::vector<FieldElem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
        if (c_.empty()) throw ValidationError("ring length n must be positive");
    }

    static RingElem one(FieldPtr field, std::size_t n) {
        RingElem r(std::move(field), n);
        r.c_[0] = FieldElem{1};
        return r;
    }
    static RingElem x_pow(FieldPtr field, std::size_t n, std::size_t e) {
        RingElem r(std::move(field), n);
        r.c_[e % n] = FieldElem{1};
        return r;
    }

    /// Inverse of index(): digit i in base q is the packed value of coefficient i.
    static RingElem from_index(FieldPtr field, std::size_t n, std::uint64_t index) {
        RingElem r(field, n);
        const std::uint64_t q = field->q();
        for (std::size_t i = 0; i < n; ++i) {
            r.c_[i] = FieldElem{static_cast<std::uint32_t>(index % q)};
            index /= q;
        }
        return r;
    }

    /// Reduction of a polynomial modulo x^n - 1.
    static RingElem from_poly(const Poly& f, std::size_t n) {
        RingElem r(f.field(), n);
        const auto& F = *f.field();
        for (std::size_t i = 0; i < f.coeffs().size(); ++i) r.c_[i % n] = F.add(r.c_[i % n], f.coeffs()[i]);
        return r;
    }

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return c_.size(); }
    std::span<const FieldElem> coeffs() const noexcept { return c_; }
    FieldElem operator[](std::size_t i) const noexcept { return c_[i]; }
    void set(std::size_t i, FieldElem v) { c_.at(i) = v; }

    std::uint64_t index() const noexcept {
        std::uint64_t idx = 0;
        const std::uint64_t q = field_->q();
        for (std::size_t i = c_.size(); i-- > 0;) idx = idx * q + c_[i].value;
        return idx;
    }

    bool is_zero() const noexcept {
        return std::all_of(c_.begin(), c_.end(), [](FieldElem x) { return x.value == 0; });
    }
    std::size_t weight() const noexcept {
        return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](FieldElem x) { return x.value != 0; }));
    }

    Poly lift() const { return Poly(field_, c_); }

    RingElem operator-() const {
        RingElem r(field_, n());
        for (std::size_t i = 0; i < n(); ++i) r.c_[i] = field_->neg(c_[i]);
        return r;
    }
    RingElem& operator+=(const RingElem& rhs) {
        check(rhs);
        for (std::size_t i = 0; i < n(); ++i) c_[i] = field_->add(c_[i], rhs.c_[i]);
        return *this;
    }
    RingElem& operator-=(const RingElem& rhs) {
        check(rhs);
        for (std::size_t i = 0; i < n(); ++i) c_[i] = field_->sub(c_[i], rhs.c_[i]);
        return *this;
    }
    friend RingElem operator+(RingElem lhs, const RingElem& rhs) { return lhs += rhs; }
    friend RingElem operator-(RingElem lhs, const RingElem& rhs) { return lhs -= rhs; }

    /// Cyclic convolution.
    friend RingElem operator*(const RingElem& lhs, const RingElem& rhs) {
        lhs.check(rhs);
        const auto& F = *lhs.field_;
        const std::size_t n = lhs.n();
        RingElem r(lhs.field_, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (lhs.c_[i].value == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t t = i + j < n ? i + j : i + j - n;
                r.c_[t] = F.add(r.c_[t], F.mul(lhs.c_[i], rhs.c_[j]));
            }
        }
        return r;
    }

    RingElem scaled(FieldElem s) const {
        RingElem r(field_, n());
        for (std::size_t i = 0; i < n(); ++i) r.c_[i] = field_->mul(c_[i], s);
        return r;
    }

    friend bool operator==(const RingElem& lhs, const RingElem& rhs) noexcept {
        return same_field(*lhs.field_, *rhs.field_) && lhs.c_ == rhs.c_;
    }

   private:
    FieldPtr field_;
    std::vector<FieldElem> c_;

    void check(const RingElem& rhs) const {
        require_same_field(field_, rhs.field_);
        if (n() != rhs.n()) throw ValidationError("ring elements have different lengths");
    }
};

/// a'(x) = a(x^{n-1}) mod (x^n - 1): coefficient i moves to (n - i) mod n.
inline RingElem reciprocal(const RingElem& a) {
    const std::size_t n = a.n();
    RingElem r(a.field(), n);
    for (std::size_t i = 0; i < n; ++i) r.set((n - i) % n, a[i]);
    return r;
}

inline Poly ring_gcd(const Poly& a, const Poly& b) { return gcd(a, b); }

/// gcd(lift(a), x^n - 1) = 1
inline bool is_unit(const RingElem& a) {
    return gcd(a.lift(), Poly::x_n_minus_1(a.field(), a.n())).is_one();
}

inline std::optional<RingElem> ring_inverse(const RingElem& a) {
    const auto eg = ext_gcd(a.lift(), Poly::x_n_minus_1(a.field(), a.n()));
    if (!eg.g.is_one()) return std::nullopt;
    return RingElem::from_poly(eg.s, a.n());
}

/// Parses "c0,c1,...": packed field values in ascending degree order.
inline std::vector<std::uint64_t> parse_coeff_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char ch) { return std::isspace(ch); }), tok.end());
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char ch) { return std::isdigit(ch); }))
            throw ValidationError("malformed coefficient list \"" + text + "\"");
        try {
            out.push_back(std::stoull(tok));
        } catch (const std::out_of_range&) {
            throw ValidationError("coefficient out of range in \"" + text + "\"");
        }
    }
    if (out.empty()) throw ValidationError("empty coefficient list");
    return out;
}

template <class Range>
std::string format_coeff_list(const Range& values) {
    std::string out;
    for (const auto& v : values) {
        if (!out.empty()) out += ',';
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, FieldElem>)
            out += std::to_string(v.value);
        else
            out += std::to_string(v);
    }
    return out;
}

/// Ring element from a coefficient list of at most n entries (zero padded).
inline RingElem parse_ring_elem(const FieldPtr& field, std::size_t n, const std::string& text) {
    const auto vals = parse_coeff_list(text);
    if (vals.size() > n) throw ValidationError("polynomial \"" + text + "\" has more than n = " + std::to_string(n) + " coefficients");
    RingElem r(field, n);
    for (std::size_t i = 0; i < vals.size(); ++i) r.set(i, field->element(vals[i]));
    return r;
}

}  // namespace fourcirc

#endif
