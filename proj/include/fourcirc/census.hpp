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

#ifndef FOURCIRC_CENSUS_HPP
#define FOURCIRC_CENSUS_HPP

#include <algorithm>
#include <atomic>
#include <functional>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "factorization.hpp"
#include "four_circulant.hpp"
#include "galois.hpp"
#include "numtheory.hpp"
#include "parallel.hpp"
#include "polyring.hpp"

namespace fourcirc {

/// Brute-force and closed-form values of one counting identity.
struct CountPair {
    std::uint64_t brute_force = 0;
    std::uint64_t formula = 0;

    bool agree() const noexcept { return brute_force == formula; }
};

/// Solutions of x^2 + y^2 = -1 over F_q (q odd) against q - eta(-1).
inline CountPair count_sum_of_squares(const GaloisField& F) {
    if (F.p() == 2) throw ValidationError("sum-of-squares count needs odd q");
    const FieldElem minus_one = F.neg(F.one());
    CountPair out;
    for (std::uint32_t x = 0; x < F.q(); ++x)
        for (std::uint32_t y = 0; y < F.q(); ++y)
            if (F.add(F.mul({x}, {x}), F.mul({y}, {y})) == minus_one) ++out.brute_force;
    out.formula = static_cast<std::uint64_t>(static_cast<std::int64_t>(F.q()) - F.quad_char(minus_one));
    return out;
}

/// Solutions (a, b) in F_{q^2} of a^{1+q} + b^{1+q} = -1 against (q+1)(q^2-q).
/// Valid for every prime power q.
inline CountPair count_hermitian(const GaloisField& base, std::uint64_t cap = kDefaultWorkloadCap) {
    const std::uint64_t big_q = std::uint64_t{base.q()} * base.q();
    if (big_q > kMaxFieldOrder || big_q * big_q > cap)
        throw WorkloadError("Hermitian count over F_{q^2} x F_{q^2} exceeds the cap", big_q * big_q, cap);
    const FieldPtr ext = GaloisField::make(base.p(), 2 * base.k());
    const auto& E = *ext;
    const FieldElem minus_one = E.neg(E.one());
    std::vector<FieldElem> norm(E.q());
    for (std::uint32_t v = 0; v < E.q(); ++v) norm[v] = E.mul({v}, E.frobenius({v}, base.k()));
    CountPair out;
    for (std::uint32_t a = 0; a < E.q(); ++a)
        for (std::uint32_t b = 0; b < E.q(); ++b)
            if (E.add(norm[a], norm[b]) == minus_one) ++out.brute_force;
    const std::uint64_t q = base.q();
    out.formula = (q + 1) * (q * q - q);
    return out;
}

/// n an odd prime, gcd(n, q) = 1 and q a primitive root mod n.
inline bool enumeration_formula_applies(const GaloisField& F, std::size_t n) {
    return n > 2 && is_prime(n) && std::gcd<std::uint64_t, std::uint64_t>(n, F.q()) == 1 && is_primitive_root(F.q(), n);
}

/// Closed-form number of self-dual pairs (a, b) when x^n - 1 = (x - 1) h(x):
/// (q - eta(-1)) (q^{(n-1)/2} + 1)(q^{n-1} - q^{(n-1)/2}) for odd q, with
/// the first factor replaced by q for even q.
inline std::optional<BigInt> self_dual_count_formula(const GaloisField& F, std::size_t n) {
    if (!enumeration_formula_applies(F, n)) return std::nullopt;
    const std::uint64_t q = F.q();
    const BigInt half = big_pow(q, (n - 1) / 2);
    const BigInt full = big_pow(q, n - 1);
    const BigInt lead = F.p() == 2 ? BigInt(q) : BigInt(static_cast<std::int64_t>(q) - F.quad_char(F.neg(F.one())));
    return lead * (half + 1) * (full - half);
}

struct EnumerateOptions {
    bool with_distances = false;
    std::uint64_t cap = kDefaultWorkloadCap;
    unsigned workers = 1;
    /// Called now and then with (codes measured, codes found) during the distance phase.
    std::function<void(std::uint64_t, std::uint64_t)> progress{};
};

/// A self-dual generator pair, identified by the base-q indices of a and b.
struct SelfDualPair {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::optional<std::size_t> distance;
};

struct CensusReport {
    FieldPtr field;
    std::size_t n = 0;
    bool formula_applicable = false;
    std::optional<BigInt> formula_count;
    std::uint64_t pair_count = 0;
    std::uint64_t distinct_code_count = 0;
    std::vector<SelfDualPair> pairs;  // a-major, b-minor
    std::map<std::size_t, std::uint64_t> distance_histogram;

    bool formula_matches() const { return formula_count && *formula_count == pair_count; }
};

namespace detail {

inline std::uint64_t splitmix(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// 128-bit fingerprint of the reduced row echelon form of the generator
/// matrix; equal codes have equal fingerprints.
inline std::pair<std::uint64_t, std::uint64_t> code_fingerprint(const FourCirculantCode& code) {
    const auto [echelon, rank] = code.generator_matrix().rref();
    std::uint64_t h1 = 0x243f6a8885a308d3ULL ^ rank, h2 = 0x13198a2e03707344ULL ^ echelon.cols();
    for (auto x : echelon.data()) {
        h1 = splitmix(h1 ^ x.value);
        h2 = splitmix(h2 + 0x632be59bd9b4e019ULL * (x.value + 1));
    }
    return {h1, h2};
}

}  // namespace detail

/// Scans every (a, b) in R(n, F_q)^2 against 1 + aa' + bb' = 0, a-major in
/// ascending base-q order. Output is identical for any worker count.
inline CensusReport enumerate_self_dual(const FieldPtr& field, std::size_t n, const EnumerateOptions& opts = {}) {
    require_coprime(n, *field);
    const auto& F = *field;
    const std::uint64_t count = checked_pow(F.q(), n);
    if (count > (std::uint64_t{1} << 32) || count * count > opts.cap)
        throw WorkloadError("exhaustive (a, b) sweep exceeds the cap", count > (std::uint64_t{1} << 32) ? UINT64_MAX : count * count,
                            opts.cap);

    // norm[i] = index of r r' ; want[i] = index of -(1 + r r')
    std::vector<std::uint64_t> norm(count), want(count);
    const RingElem one = RingElem::one(field, n);
    for (std::uint64_t i = 0; i < count; ++i) {
        const RingElem r = RingElem::from_index(field, n, i);
        const RingElem s = r * reciprocal(r);
        norm[i] = s.index();
        want[i] = (-(one + s)).index();
    }

    std::vector<std::vector<SelfDualPair>> partial(std::max(1u, opts.workers));
    parallel_chunks(count, opts.workers, [&](std::uint64_t lo, std::uint64_t hi, unsigned chunk) {
        auto& out = partial[chunk];
        for (std::uint64_t a = lo; a < hi; ++a) {
            const std::uint64_t target = want[a];
            for (std::uint64_t b = 0; b < count; ++b)
                if (norm[b] == target) out.push_back({a, b, std::nullopt});
        }
    });

    CensusReport report;
    report.field = field;
    report.n = n;
    report.formula_applicable = enumeration_formula_applies(F, n);
    report.formula_count = self_dual_count_formula(F, n);
    for (auto& part : partial) report.pairs.insert(report.pairs.end(), part.begin(), part.end());
    report.pair_count = report.pairs.size();

    const std::uint64_t total = report.pairs.size();
    std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> prints(std::max(1u, opts.workers));
    std::atomic<std::uint64_t> measured{0};
    parallel_chunks(total, opts.workers, [&](std::uint64_t lo, std::uint64_t hi, unsigned chunk) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            auto& p = report.pairs[i];
            const FourCirculantCode code(RingElem::from_index(field, n, p.a), RingElem::from_index(field, n, p.b));
            prints[chunk].push_back(detail::code_fingerprint(code));
            if (!opts.with_distances) continue;
            p.distance = code.min_distance({opts.cap, 1}).distance;
            const auto done = ++measured;
            if (chunk == 0 && opts.progress && (i - lo) % 256 == 0) opts.progress(done, total);
        }
    });
    if (opts.with_distances && opts.progress) opts.progress(total, total);
    std::set<std::pair<std::uint64_t, std::uint64_t>> distinct;
    for (const auto& part : prints) distinct.insert(part.begin(), part.end());
    report.distinct_code_count = distinct.size();
    if (opts.with_distances)
        for (const auto& p : report.pairs) ++report.distance_histogram[*p.distance];
    return report;
}

/// Self-dual pairs ranked by minimum distance (descending), ties by (a, b).
inline std::vector<SelfDualPair> search_best(const FieldPtr& field, std::size_t n, std::size_t top, EnumerateOptions opts = {}) {
    opts.with_distances = true;
    auto report = enumerate_self_dual(field, n, opts);
    auto pairs = std::move(report.pairs);
    std::stable_sort(pairs.begin(), pairs.end(), [](const SelfDualPair& x, const SelfDualPair& y) {
        if (*x.distance != *y.distance) return *x.distance > *y.distance;
        return std::pair{x.a, x.b} < std::pair{y.a, y.b};
    });
    if (pairs.size() > top) pairs.resize(top);
    return pairs;
}

/// Scalar multiple of the all-ones vector (zero included): the words of the
/// cyclic code generated by h(x) when x^n - 1 = (x - 1) h(x).
inline bool is_constant_vector(const RingElem& r) noexcept {
    const auto c = r.coeffs();
    return std::all_of(c.begin(), c.end(), [&](FieldElem x) { return x == c[0]; });
}

/// Solution of the unit case: with s = cc' + dd' invertible,
/// a = (ec' + df') / s and b = (fc' - de') / s.
inline std::optional<std::pair<RingElem, RingElem>> solve_generator(const Codeword& u) {
    const RingElem c_rec = reciprocal(u.c), d_rec = reciprocal(u.d);
    const auto inv = ring_inverse(u.c * c_rec + u.d * d_rec);
    if (!inv) return std::nullopt;
    RingElem a = (u.e * c_rec + u.d * reciprocal(u.f)) * *inv;
    RingElem b = (u.f * c_rec - u.d * reciprocal(u.e)) * *inv;
    return std::pair{std::move(a), std::move(b)};
}

struct MembershipResult {
    std::uint64_t count = 0;            // generator pairs (a, b) with u in C_{a,b}
    std::uint64_t count_self_dual = 0;  // restricted to self-dual pairs
    std::uint64_t count_coprime = 0;    // restricted to a, b both coprime to x^n - 1
    std::uint64_t bound = 0;            // q^n (q - 1)
    bool unique = false;                // cc' + dd' is a unit
    std::optional<std::pair<RingElem, RingElem>> unit_solution;
    bool solution_verified = false;     // the unit solution generates a code containing u
};

/// Counts, over all q^{2n} generator pairs, the codes C_{a,b} containing u.
inline MembershipResult membership_census(const FieldPtr& field, std::size_t n, const Codeword& u,
                                          std::uint64_t cap = kDefaultWorkloadCap) {
    const auto& F = *field;
    const std::uint64_t count = checked_pow(F.q(), n);
    if (count * count > cap) throw WorkloadError("membership census over all generator pairs exceeds the cap", count * count, cap);
    const FourCirculantCode shape(u.c, u.d);  // validates field and lengths
    (void)shape;

    // u in C_{a,b}  <=>  c a = e + d b'  and  c b = f - d a'
    std::vector<std::uint64_t> cr(count), e_dbr(count), f_dar(count), norm(count), want(count);
    std::vector<bool> unit(count);
    const RingElem one = RingElem::one(field, n);
    for (std::uint64_t i = 0; i < count; ++i) {
        const RingElem r = RingElem::from_index(field, n, i);
        const RingElem r_rec = reciprocal(r);
        cr[i] = (u.c * r).index();
        e_dbr[i] = (u.e + u.d * r_rec).index();
        f_dar[i] = (u.f - u.d * r_rec).index();
        const RingElem s = r * r_rec;
        norm[i] = s.index();
        want[i] = (-(one + s)).index();
        unit[i] = is_unit(r);
    }
    MembershipResult out;
    for (std::uint64_t a = 0; a < count; ++a)
        for (std::uint64_t b = 0; b < count; ++b)
            if (cr[a] == e_dbr[b] && cr[b] == f_dar[a]) {
                ++out.count;
                if (norm[b] == want[a]) ++out.count_self_dual;
                if (unit[a] && unit[b]) ++out.count_coprime;
            }
    out.bound = count * (F.q() - 1);
    out.unit_solution = solve_generator(u);
    out.unique = out.unit_solution.has_value();
    if (out.unit_solution) out.solution_verified = FourCirculantCode(out.unit_solution->first, out.unit_solution->second).contains(u);
    return out;
}

/// Membership counts for every u in F_q^{4n} at once, aggregated over the
/// vectors whose c and d blocks are both non-constant.
struct MembershipProfile {
    std::uint64_t bound = 0;
    std::uint64_t vectors = 0;            // u with non-constant c and d
    std::uint64_t max_count = 0;          // over all generator pairs
    std::uint64_t max_count_self_dual = 0;
    std::uint64_t max_count_coprime = 0;
    std::uint64_t violations = 0;         // u whose count exceeds the bound
    std::uint64_t violations_self_dual = 0;
    std::uint64_t violations_coprime = 0;
    std::uint64_t argmax = 0;             // packed index (c, d, e, f blocks, base q^n digits) of a maximiser
    std::uint64_t unit_cases = 0;         // (a, b, c, d) with cc' + dd' a unit
    std::uint64_t unit_reproduced = 0;    // of those, the solved generator equals (a, b)
};

inline MembershipProfile membership_profile(const FieldPtr& field, std::size_t n, std::uint64_t cap = kDefaultWorkloadCap) {
    const auto& F = *field;
    const std::uint64_t count = checked_pow(F.q(), n);
    const std::uint64_t space = count * count * count * count;
    if (count > (1u << 16) || space > cap) throw WorkloadError("membership profile over F_q^{4n} exceeds the cap", space, cap);

    std::vector<RingElem> elems;
    elems.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) elems.push_back(RingElem::from_index(field, n, i));
    std::vector<std::uint32_t> mul(count * count), add(count * count), rec(count), neg(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        rec[i] = static_cast<std::uint32_t>(reciprocal(elems[i]).index());
        neg[i] = static_cast<std::uint32_t>((-elems[i]).index());
        for (std::uint64_t j = 0; j < count; ++j) {
            mul[i * count + j] = static_cast<std::uint32_t>((elems[i] * elems[j]).index());
            add[i * count + j] = static_cast<std::uint32_t>((elems[i] + elems[j]).index());
        }
    }
    auto M = [&](std::uint64_t x, std::uint64_t y) -> std::uint64_t { return mul[x * count + y]; };
    auto A = [&](std::uint64_t x, std::uint64_t y) -> std::uint64_t { return add[x * count + y]; };
    const std::uint64_t one = RingElem::one(field, n).index();

    std::vector<bool> self_dual(count * count), unit(count);
    for (std::uint64_t a = 0; a < count; ++a) {
        unit[a] = is_unit(elems[a]);
        for (std::uint64_t b = 0; b < count; ++b) self_dual[a * count + b] = A(A(one, M(a, rec[a])), M(b, rec[b])) == 0;
    }

    // inverse of cc' + dd' per message, or UINT64_MAX
    std::vector<std::uint64_t> inv_of(count, UINT64_MAX);
    for (std::uint64_t i = 0; i < count; ++i) {
        if (auto inv = ring_inverse(elems[i])) inv_of[i] = inv->index();
    }

    std::vector<std::uint16_t> hits(space, 0), hits_sd(space, 0), hits_cp(space, 0);
    MembershipProfile prof;
    for (std::uint64_t a = 0; a < count; ++a)
        for (std::uint64_t b = 0; b < count; ++b) {
            const bool sd = self_dual[a * count + b];
            const bool cp = unit[a] && unit[b];
            const std::uint64_t neg_brec = neg[rec[b]], arec = rec[a];
            for (std::uint64_t c = 0; c < count; ++c)
                for (std::uint64_t d = 0; d < count; ++d) {
                    const std::uint64_t e = A(M(c, a), M(d, neg_brec));
                    const std::uint64_t f = A(M(c, b), M(d, arec));
                    const std::uint64_t u = ((c * count + d) * count + e) * count + f;
                    ++hits[u];
                    if (sd) ++hits_sd[u];
                    if (cp) ++hits_cp[u];
                    const std::uint64_t s = A(M(c, rec[c]), M(d, rec[d]));
                    if (inv_of[s] == UINT64_MAX) continue;
                    ++prof.unit_cases;
                    // a = (e c' + d f') / s, b = (f c' - d e') / s
                    const std::uint64_t sa = M(A(M(e, rec[c]), M(d, rec[f])), inv_of[s]);
                    const std::uint64_t sb = M(A(M(f, rec[c]), neg[M(d, rec[e])]), inv_of[s]);
                    if (sa == a && sb == b) ++prof.unit_reproduced;
                }
        }

    prof.bound = count * (F.q() - 1);
    for (std::uint64_t c = 0; c < count; ++c) {
        if (is_constant_vector(elems[c])) continue;
        for (std::uint64_t d = 0; d < count; ++d) {
            if (is_constant_vector(elems[d])) continue;
            for (std::uint64_t ef = 0; ef < count * count; ++ef) {
                const std::uint64_t u = (c * count + d) * count * count + ef;
                ++prof.vectors;
                if (hits[u] > prof.max_count) {
                    prof.max_count = hits[u];
                    prof.argmax = u;
                }
                prof.max_count_self_dual = std::max<std::uint64_t>(prof.max_count_self_dual, hits_sd[u]);
                prof.max_count_coprime = std::max<std::uint64_t>(prof.max_count_coprime, hits_cp[u]);
                prof.violations += hits[u] > prof.bound;
                prof.violations_self_dual += hits_sd[u] > prof.bound;
                prof.violations_coprime += hits_cp[u] > prof.bound;
            }
        }
    }
    return prof;
}

struct ArtinScan {
    std::vector<std::uint64_t> primes;  // odd primes n with q a primitive root mod n
    std::uint64_t eligible = 0;         // odd primes n <= limit with gcd(n, q) = 1
    double density = 0.0;
    bool q_is_square = false;
};

/// Lengths n <= limit where x^n - 1 = (x - 1) h(x) over F_q with h irreducible.
inline ArtinScan artin_scan(std::uint64_t q, std::uint64_t limit) {
    if (q < 2) throw ValidationError("artin scan needs q >= 2");
    if (limit > 10'000'000) throw ValidationError("prime limit above 10^7");
    ArtinScan out;
    out.q_is_square = is_perfect_square(q);
    for (auto n : primes_up_to(limit)) {
        if (n == 2 || q % n == 0) continue;
        ++out.eligible;
        if (multiplicative_order(q % n, n) == n - 1) out.primes.push_back(n);
    }
    out.density = out.eligible ? static_cast<double>(out.primes.size()) / static_cast<double>(out.eligible) : 0.0;
    return out;
}

}  // namespace fourcirc

#endif
