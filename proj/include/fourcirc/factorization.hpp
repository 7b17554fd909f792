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

#ifndef FOURCIRC_FACTORIZATION_HPP
#define FOURCIRC_FACTORIZATION_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "galois.hpp"
#include "numtheory.hpp"
#include "polyring.hpp"

namespace fourcirc {

/// Orbits of i -> q*i on Z/nZ, ordered by least representative; each coset is
/// listed in generation order s, sq, sq^2, ...
inline std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(std::uint64_t q, std::uint64_t n) {
    if (n == 0 || std::gcd(q, n) != 1) throw ValidationError("cyclotomic cosets need gcd(n, q) = 1");
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::uint64_t>> out;
    for (std::uint64_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::uint64_t> coset;
        for (std::uint64_t i = s; !seen[i]; i = mulmod(i, q, n)) {
            seen[i] = true;
            coset.push_back(i);
        }
        out.push_back(std::move(coset));
    }
    return out;
}

struct CyclotomicFactor {
    Poly poly;                          // monic irreducible factor of x^n - 1
    std::vector<std::uint64_t> coset;   // exponents i with beta^i a root
};

/// x^n - 1 = alpha * prod g_i * prod h_j h_j^*, all factors monic.
struct FactorizationReport {
    FieldPtr field;
    std::size_t n = 0;
    FieldElem alpha;
    std::vector<CyclotomicFactor> self_reciprocal;
    std::vector<std::pair<CyclotomicFactor, CyclotomicFactor>> pairs;
    std::vector<std::vector<std::uint64_t>> cosets;

    std::size_t factor_count() const noexcept { return self_reciprocal.size() + 2 * pairs.size(); }

    /// Self-reciprocal factors, then each pair as (h, h*).
    std::vector<CyclotomicFactor> factors() const {
        std::vector<CyclotomicFactor> out = self_reciprocal;
        for (const auto& [h, hs] : pairs) {
            out.push_back(h);
            out.push_back(hs);
        }
        return out;
    }

    Poly product() const {
        Poly acc = Poly::constant(field, alpha);
        for (const auto& f : factors()) acc = acc * f.poly;
        return acc;
    }
};

inline void require_coprime(std::size_t n, const GaloisField& field) {
    if (n == 0 || std::gcd<std::uint64_t, std::uint64_t>(n, field.q()) != 1)
        throw ValidationError("need gcd(n, q) = 1, got n = " + std::to_string(n) + ", q = " + std::to_string(field.q()));
}

/// Factors x^n - 1 over F_q through cyclotomic cosets: the minimal polynomial
/// of beta^s for a primitive n-th root of unity beta in F_{q^m}, m = ord_n(q).
inline FactorizationReport factor_xn_minus_1(std::size_t n, const FieldPtr& field) {
    require_coprime(n, *field);
    const std::uint64_t m = multiplicative_order(field->q(), n);
    const std::uint64_t split_degree = std::uint64_t{field->k()} * m;
    std::uint64_t split_order = 1;
    for (std::uint64_t i = 0; i < split_degree; ++i) {
        split_order *= field->p();
        if (split_order > kMaxFieldOrder)
            throw WorkloadError("splitting field F_" + std::to_string(field->p()) + "^" + std::to_string(split_degree) +
                                    " of x^" + std::to_string(n) + " - 1 exceeds the field size limit",
                                split_order, kMaxFieldOrder);
    }
    const FieldPtr big = GaloisField::make(field->p(), static_cast<std::uint32_t>(split_degree));
    const FieldEmbedding embed(field, big);
    const FieldElem beta = big->pow(big->primitive_element(), (big->q() - 1) / n);

    FactorizationReport report;
    report.field = field;
    report.n = n;
    report.alpha = field->one();
    report.cosets = cyclotomic_cosets(field->q(), n);

    auto min_poly = [&](const std::vector<std::uint64_t>& coset) {
        // prod (x - beta^i) over the coset, computed in F_{q^m}
        std::vector<FieldElem> acc{big->one()};
        for (auto i : coset) {
            const FieldElem root = big->neg(big->pow(beta, i));
            std::vector<FieldElem> next(acc.size() + 1, FieldElem{});
            for (std::size_t j = 0; j < acc.size(); ++j) {
                next[j + 1] = big->add(next[j + 1], acc[j]);
                next[j] = big->add(next[j], big->mul(acc[j], root));
            }
            acc = std::move(next);
        }
        std::vector<FieldElem> coeffs(acc.size());
        for (std::size_t j = 0; j < acc.size(); ++j) {
            const auto pre = embed.preimage(acc[j]);
            if (!pre) throw std::logic_error("minimal polynomial coefficient outside the base field");
            coeffs[j] = *pre;
        }
        return Poly(field, std::move(coeffs));
    };

    std::vector<std::int64_t> coset_of(n, -1);
    for (std::size_t c = 0; c < report.cosets.size(); ++c)
        for (auto i : report.cosets[c]) coset_of[i] = static_cast<std::int64_t>(c);

    std::vector<bool> used(report.cosets.size(), false);
    for (std::size_t c = 0; c < report.cosets.size(); ++c) {
        if (used[c]) continue;
        used[c] = true;
        const auto& coset = report.cosets[c];
        const auto mirror = static_cast<std::size_t>(coset_of[(n - coset[0]) % n]);
        CyclotomicFactor f{min_poly(coset), coset};
        if (mirror == c) {
            report.self_reciprocal.push_back(std::move(f));
            continue;
        }
        used[mirror] = true;
        CyclotomicFactor g{min_poly(report.cosets[mirror]), report.cosets[mirror]};
        const auto fv = f.poly.values(), gv = g.poly.values();
        if (std::lexicographical_compare(gv.begin(), gv.end(), fv.begin(), fv.end())) std::swap(f, g);
        report.pairs.emplace_back(std::move(f), std::move(g));
    }

    if (!(report.product() == Poly::x_n_minus_1(field, n))) throw std::logic_error("factorization does not re-expand to x^n - 1");
    return report;
}

/// x^n - 1 has exactly two irreducible factors over F_q.
inline bool is_two_factor_case(std::size_t n, const GaloisField& field) {
    require_coprime(n, field);
    return cyclotomic_cosets(field.q(), n).size() == 2;
}

}  // namespace fourcirc

#endif
