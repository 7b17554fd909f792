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

#ifndef FOURCIRC_ASYMPT_HPP
#define FOURCIRC_ASYMPT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "census.hpp"
#include "errors.hpp"
#include "galois.hpp"

namespace fourcirc {

/// q-ary entropy H_q(t) = t log_q(q-1) - t log_q t - (1-t) log_q(1-t) on
/// [0, (q-1)/q], with H_q(0) = 0.
inline double entropy(std::uint64_t q, double t) {
    if (q < 2) throw ValidationError("entropy needs q >= 2");
    const double top = static_cast<double>(q - 1) / static_cast<double>(q);
    if (!(t >= 0.0) || t > top + 1e-15) throw ValidationError("entropy argument outside [0, (q-1)/q]");
    if (t == 0.0) return 0.0;
    t = std::min(t, top);
    const double lq = std::log(static_cast<double>(q));
    return (t * std::log(static_cast<double>(q - 1)) - t * std::log(t) - (1.0 - t) * std::log1p(-t)) / lq;
}

/// The t in [0, (q-1)/q] with H_q(t) = y, by bisection until the bracket
/// stops shrinking (well below 1e-12).
inline double entropy_inverse(std::uint64_t q, double y) {
    if (q < 2) throw ValidationError("entropy needs q >= 2");
    if (!(y >= 0.0) || y > 1.0) throw ValidationError("entropy value outside [0, 1]");
    double lo = 0.0, hi = static_cast<double>(q - 1) / static_cast<double>(q);
    if (y == 0.0) return 0.0;
    if (y == 1.0) return hi;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (entropy(q, mid) < y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// |{v in F_q^N : wt(v) <= r}| = sum_{i <= r} C(N, i) (q-1)^i
inline BigInt ball_volume(std::uint64_t q, std::uint64_t length, std::uint64_t radius) {
    if (radius > length) throw ValidationError("ball radius exceeds the length");
    BigInt binom = 1, scale = 1, total = 0;
    for (std::uint64_t i = 0; i <= radius; ++i) {
        total += binom * scale;
        binom = binom * (length - i) / (i + 1);
        scale *= (q - 1);
    }
    return total;
}

/// log_q V(N, floor(tN)) / N - H_q(t); tends to 0 from below.
inline double entropy_volume_gap(std::uint64_t q, double t, std::uint64_t length) {
    if (length == 0) throw ValidationError("length must be positive");
    const auto radius = static_cast<std::uint64_t>(std::floor(t * static_cast<double>(length)));
    const BigInt vol = ball_volume(q, length, std::min(radius, length));
    return big_log(vol) / std::log(static_cast<double>(q)) / static_cast<double>(length) - entropy(q, t);
}

/// Finite-n counting argument: a self-dual four circulant code of distance
/// greater than d exists as soon as q^n (q-1) (V(4n, d) - 1) is below the
/// number of self-dual codes.
struct BoundReport {
    std::uint64_t q = 0;
    std::size_t n = 0;
    BigInt total_self_dual;
    std::vector<BigInt> bad_bound;  // indexed by d, up to the first d that fails
    std::size_t guaranteed_distance = 1;
    double delta_star = 0.0;        // H_q^{-1}(1/8)
    std::optional<double> entropy_at_guarantee;
    std::vector<std::string> notes;
};

inline BoundReport expurgation_bound(const GaloisField& F, std::size_t n) {
    auto total = self_dual_count_formula(F, n);
    if (!total) throw ValidationError("expurgation bound needs n an odd prime with q a primitive root mod n");
    BoundReport r;
    r.q = F.q();
    r.n = n;
    r.total_self_dual = *total;
    const std::uint64_t length = 4 * n;
    const BigInt per_word = big_pow(F.q(), n) * (F.q() - 1);
    for (std::uint64_t d = 0; d <= length; ++d) {
        r.bad_bound.push_back(per_word * (ball_volume(F.q(), length, d) - 1));
        if (r.bad_bound.back() >= r.total_self_dual) break;
        r.guaranteed_distance = d + 1;
    }
    r.delta_star = entropy_inverse(F.q(), 0.125);
    const double rel = static_cast<double>(r.guaranteed_distance) / static_cast<double>(length);
    if (rel <= static_cast<double>(F.q() - 1) / static_cast<double>(F.q())) r.entropy_at_guarantee = entropy(F.q(), rel);
    r.notes = {
        "total_self_dual is the exact closed-form count; its leading term is of order q^(3(n-1)/2), not q^(3n/2)",
        "bad_bound counts every nonzero word of weight <= d, without excluding constant c or d blocks",
        "guaranteed_distance = 1 means the inequality gives nothing beyond the trivial bound at this n",
    };
    return r;
}

struct CodeParams {
    std::uint64_t length = 0;
    std::uint64_t dimension = 0;
    std::uint64_t distance = 0;
};

struct RateDistance {
    double alpha = 0.0;  // max k/N over the family
    double delta = 0.0;  // min d/N over the family
};

/// Finite-family stand-ins for limsup k_n/n and liminf d_n/n.
inline RateDistance rate_and_delta(const std::vector<CodeParams>& family) {
    if (family.empty()) throw ValidationError("rate_and_delta needs at least one code");
    RateDistance out{0.0, 1.0};
    for (const auto& c : family) {
        if (c.length == 0) throw ValidationError("code length must be positive");
        out.alpha = std::max(out.alpha, static_cast<double>(c.dimension) / static_cast<double>(c.length));
        out.delta = std::min(out.delta, static_cast<double>(c.distance) / static_cast<double>(c.length));
    }
    return out;
}

}  // namespace fourcirc

#endif
