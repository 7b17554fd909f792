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

#ifndef FOURCIRC_CRT_HPP
#define FOURCIRC_CRT_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "factorization.hpp"
#include "four_circulant.hpp"
#include "galois.hpp"
#include "matrix.hpp"
#include "polyring.hpp"

namespace fourcirc {

enum class ConstituentKind { SelfReciprocal, PairFirst, PairSecond };

inline std::string to_string(ConstituentKind kind) {
    switch (kind) {
        case ConstituentKind::SelfReciprocal: return "self-reciprocal";
        case ConstituentKind::PairFirst: return "pair-first";
        case ConstituentKind::PairSecond: return "pair-second";
    }
    return "unknown";
}

/// Per-factor data shared by every code of a given (q, n).
struct CrtFactor {
    CyclotomicFactor factor;
    ConstituentKind kind;
    FieldPtr field;                            // F_q[x]/(f) realised as F_{p^{k deg f}}
    std::shared_ptr<const FieldEmbedding> embed;  // F_q -> field
    FieldElem root;                            // first root of f in field
    std::vector<std::uint64_t> residue_of;     // field value -> index of the residue mod f
    Poly idempotent;                           // 1 mod f, 0 mod every other factor
};

/// Factorisation of x^n - 1 plus, for each irreducible factor f, the field
/// F_q[x]/(f), a root of f in it and the CRT idempotent.
class CrtContext {
   public:
    CrtContext(FieldPtr field, std::size_t n) : field_(std::move(field)), n_(n), report_(factor_xn_minus_1(n, field_)) {
        for (const auto& f : report_.self_reciprocal) add_factor(f, ConstituentKind::SelfReciprocal);
        for (const auto& [h, hs] : report_.pairs) {
            add_factor(h, ConstituentKind::PairFirst);
            add_factor(hs, ConstituentKind::PairSecond);
        }
    }

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return n_; }
    const FactorizationReport& factorization() const noexcept { return report_; }
    std::span<const CrtFactor> factors() const noexcept { return factors_; }

   private:
    FieldPtr field_;
    std::size_t n_;
    FactorizationReport report_;
    std::vector<CrtFactor> factors_;

    void add_factor(const CyclotomicFactor& f, ConstituentKind kind) {
        const auto d = static_cast<std::uint32_t>(f.poly.degree());
        FieldPtr ext = GaloisField::make(field_->p(), field_->k() * d);
        auto embed = std::make_shared<const FieldEmbedding>(field_, ext);

        FieldElem root{};
        bool found = false;
        for (std::uint32_t v = 0; v < ext->q() && !found; ++v) {
            FieldElem acc{};
            for (std::size_t i = f.poly.coeffs().size(); i-- > 0;) acc = ext->add(ext->mul(acc, {v}), (*embed)(f.poly[i]));
            if (acc.value == 0) {
                root = {v};
                found = true;
            }
        }
        if (!found) throw std::logic_error("irreducible factor has no root in its residue field");

        // r(x) = sum r_i x^i, deg r < d  ->  r(root); a bijection F_q[x]/(f) -> ext
        std::vector<std::uint64_t> residue_of(ext->q(), UINT64_MAX);
        std::vector<FieldElem> powers(d);
        powers[0] = ext->one();
        for (std::uint32_t i = 1; i < d; ++i) powers[i] = ext->mul(powers[i - 1], root);
        for (std::uint64_t idx = 0; idx < ext->q(); ++idx) {
            std::uint64_t rest = idx;
            FieldElem acc{};
            for (std::uint32_t i = 0; i < d; ++i) {
                acc = ext->add(acc, ext->mul((*embed)(FieldElem{static_cast<std::uint32_t>(rest % field_->q())}), powers[i]));
                rest /= field_->q();
            }
            if (residue_of[acc.value] != UINT64_MAX) throw std::logic_error("residue map is not injective");
            residue_of[acc.value] = idx;
        }

        const Poly whole = Poly::x_n_minus_1(field_, n_);
        const Poly cofactor = whole / f.poly;
        const auto eg = ext_gcd(cofactor, f.poly);
        if (!eg.g.is_one()) throw std::logic_error("factor is not coprime to its cofactor");
        Poly idem = (eg.s * cofactor) % whole;

        factors_.push_back({f, kind, std::move(ext), std::move(embed), root, std::move(residue_of), std::move(idem)});
    }
};

/// Image of a code in F_q[x]/(f) for one irreducible factor f, represented by
/// the images of a, b (and of a', b') at the stored root.
struct Constituent {
    Poly factor;
    FieldPtr field;
    ConstituentKind kind;
    FieldElem root;
    FieldElem a_image;
    FieldElem b_image;
    FieldElem a_rec_image;  // a'(root) = a(root^{-1})
    FieldElem b_rec_image;
    std::uint32_t base_degree;  // k for the base field F_{p^k}
};

inline FieldElem evaluate_at(const RingElem& r, const CrtFactor& f) {
    const auto& F = *f.field;
    FieldElem acc{};
    for (std::size_t i = r.n(); i-- > 0;) acc = F.add(F.mul(acc, f.root), (*f.embed)(r[i]));
    return acc;
}

inline std::vector<Constituent> decompose(const FourCirculantCode& code, const CrtContext& ctx) {
    require_same_field(code.field(), ctx.field());
    if (code.n() != ctx.n()) throw ValidationError("code length does not match the CRT context");
    const RingElem a_rec = reciprocal(code.a()), b_rec = reciprocal(code.b());
    std::vector<Constituent> out;
    out.reserve(ctx.factors().size());
    for (const auto& f : ctx.factors()) {
        out.push_back({f.factor.poly, f.field, f.kind, f.root, evaluate_at(code.a(), f), evaluate_at(code.b(), f),
                       evaluate_at(a_rec, f), evaluate_at(b_rec, f), ctx.field()->k()});
    }
    return out;
}

inline std::vector<Constituent> decompose(const FourCirculantCode& code) {
    return decompose(code, CrtContext(code.field(), code.n()));
}

/// CRT interpolation: recovers (a, b) from the constituent images.
inline std::pair<RingElem, RingElem> reconstruct(std::span<const Constituent> constituents, const CrtContext& ctx) {
    if (constituents.size() != ctx.factors().size()) throw ValidationError("one constituent per irreducible factor is required");
    const std::size_t n = ctx.n();
    const Poly whole = Poly::x_n_minus_1(ctx.field(), n);
    Poly a(ctx.field()), b(ctx.field());
    for (std::size_t i = 0; i < constituents.size(); ++i) {
        const auto& f = ctx.factors()[i];
        if (!(constituents[i].factor == f.factor.poly)) throw ValidationError("constituent order does not match the CRT context");
        auto residue = [&](FieldElem img) {
            return RingElem::from_index(ctx.field(), n, f.residue_of.at(img.value)).lift();
        };
        a += residue(constituents[i].a_image) * f.idempotent;
        b += residue(constituents[i].b_image) * f.idempotent;
    }
    return {RingElem::from_poly(a % whole, n), RingElem::from_poly(b % whole, n)};
}

/// Hermitian self-duality of a self-reciprocal constituent: for a factor of
/// degree 2m, 1 + A A^{q^m} + B B^{q^m} = 0; for a linear factor, 1 + A^2 + B^2 = 0.
inline bool constituent_self_dual(const Constituent& con) {
    if (con.kind != ConstituentKind::SelfReciprocal) throw ValidationError("Hermitian check applies to self-reciprocal constituents only");
    const auto& F = *con.field;
    const int deg = con.factor.degree();
    auto conj = [&](FieldElem x) {
        if (deg == 1) return x;
        if (deg % 2 != 0) throw std::logic_error("self-reciprocal factor of odd degree > 1");
        return F.frobenius(x, std::uint64_t{con.base_degree} * static_cast<std::uint64_t>(deg / 2));
    };
    const FieldElem lhs = F.add(F.one(), F.add(F.mul(con.a_image, conj(con.a_image)), F.mul(con.b_image, conj(con.b_image))));
    return lhs.value == 0;
}

/// 1 + a(root) a'(root) + b(root) b'(root) = 0, i.e. the self-duality residue
/// vanishes modulo this constituent's factor. Valid for every kind.
inline bool constituent_criterion(const Constituent& con) {
    const auto& F = *con.field;
    return F.add(F.one(), F.add(F.mul(con.a_image, con.a_rec_image), F.mul(con.b_image, con.b_rec_image))).value == 0;
}

/// [1 0 A B; 0 1 -B' A'] over the constituent field (debug view).
inline Matrix constituent_generator(const Constituent& con) {
    const auto& F = *con.field;
    Matrix g(con.field, 2, 4);
    g(0, 0) = F.one();
    g(0, 2) = con.a_image;
    g(0, 3) = con.b_image;
    g(1, 1) = F.one();
    g(1, 2) = F.neg(con.b_rec_image);
    g(1, 3) = con.a_rec_image;
    return g;
}

/// The self-duality residue of the code is divisible by f.
inline bool criterion_vanishes_mod(const FourCirculantCode& code, const Poly& f) {
    return (code.criterion_residue().lift() % f).is_zero();
}

}  // namespace fourcirc

#endif
