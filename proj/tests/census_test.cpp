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

#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "fourcirc/census.hpp"

namespace {

using namespace fourcirc;

RingElem ring(const FieldPtr& F, std::vector<std::uint32_t> c) {
    std::vector<FieldElem> v;
    for (auto x : c) v.push_back(F->element(x));
    return RingElem(F, std::move(v));
}

// eta(-1) from Euler's criterion on integers: -1 is a square mod q iff q = 1 mod 4.
// Only used for prime q.
int eta_minus_one(std::uint64_t q) { return q % 4 == 1 ? 1 : -1; }

TEST(SumOfSquares, Examples) {
    for (auto [q, want] : {std::pair{3u, 4u}, {5u, 4u}, {7u, 8u}}) {
        const auto r = count_sum_of_squares(*GaloisField::make(q));
        EXPECT_EQ(r.brute_force, want);
        EXPECT_EQ(r.formula, want);
    }
}

TEST(SumOfSquares, OddFieldsUpToThirteen) {
    for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
        const auto r = count_sum_of_squares(*GaloisField::make(q));
        EXPECT_TRUE(r.agree());
        EXPECT_EQ(static_cast<std::int64_t>(r.brute_force), static_cast<std::int64_t>(q) - eta_minus_one(q));
    }
    // in F_9 every element of F_3 is a square
    const auto r9 = count_sum_of_squares(*GaloisField::make(3, 2));
    EXPECT_EQ(r9.brute_force, 8u);
    EXPECT_TRUE(r9.agree());
    EXPECT_THROW(count_sum_of_squares(*GaloisField::make(2, 2)), ValidationError);
}

TEST(Hermitian, Examples) {
    EXPECT_EQ(count_hermitian(*GaloisField::make(2)).brute_force, 6u);
    EXPECT_EQ(count_hermitian(*GaloisField::make(3)).brute_force, 24u);
    EXPECT_EQ(count_hermitian(*GaloisField::make(2, 2)).brute_force, 60u);
    const auto r5 = count_hermitian(*GaloisField::make(5));
    EXPECT_TRUE(r5.agree());
    EXPECT_EQ(r5.formula, 6u * 20u);
    EXPECT_THROW(count_hermitian(*GaloisField::make(5), 100), WorkloadError);
}

TEST(Enumerate, CountsMatchFormula) {
    for (auto [q, n, want] : {std::tuple{2u, 3u, 12u}, {2u, 5u, 120u}, {3u, 5u, 2880u}, {5u, 3u, 480u}}) {
        const auto rep = enumerate_self_dual(GaloisField::make(q), n);
        EXPECT_EQ(rep.pair_count, want);
        ASSERT_TRUE(rep.formula_count.has_value());
        EXPECT_EQ(*rep.formula_count, BigInt(want));
        EXPECT_TRUE(rep.formula_matches());
        EXPECT_EQ(rep.distinct_code_count, rep.pair_count);
    }
}

TEST(Enumerate, MatchesNaiveScan) {
    for (auto [p, k, n] : {std::tuple{2u, 1u, 3u}, {2u, 2u, 3u}, {2u, 1u, 7u}, {3u, 1u, 4u}}) {
        auto F = GaloisField::make(p, k);
        const std::uint64_t qn = checked_pow(F->q(), n);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> naive;
        for (std::uint64_t a = 0; a < qn; ++a)
            for (std::uint64_t b = 0; b < qn; ++b) {
                const auto ra = RingElem::from_index(F, n, a), rb = RingElem::from_index(F, n, b);
                if ((RingElem::one(F, n) + ra * reciprocal(ra) + rb * reciprocal(rb)).is_zero()) naive.emplace_back(a, b);
            }
        const auto rep = enumerate_self_dual(F, n);
        ASSERT_EQ(rep.pairs.size(), naive.size());
        for (std::size_t i = 0; i < naive.size(); ++i) {
            EXPECT_EQ(rep.pairs[i].a, naive[i].first);
            EXPECT_EQ(rep.pairs[i].b, naive[i].second);
        }
        EXPECT_EQ(rep.formula_applicable, enumeration_formula_applies(*F, n));
    }
}

TEST(Enumerate, FormulaNotApplicableWhenLengthHasSeveralFactors) {
    EXPECT_FALSE(self_dual_count_formula(*GaloisField::make(2), 7).has_value());
    EXPECT_FALSE(self_dual_count_formula(*GaloisField::make(2, 2), 3).has_value());
    EXPECT_FALSE(self_dual_count_formula(*GaloisField::make(2), 9).has_value());
}

TEST(Enumerate, DistancesAreWorkerIndependent) {
    EnumerateOptions one{.with_distances = true, .workers = 1};
    EnumerateOptions many{.with_distances = true, .workers = 3};
    std::uint64_t ticks = 0;
    many.progress = [&](std::uint64_t, std::uint64_t) { ++ticks; };
    const auto a = enumerate_self_dual(GaloisField::make(2), 5, one);
    const auto b = enumerate_self_dual(GaloisField::make(2), 5, many);
    ASSERT_EQ(a.pairs.size(), b.pairs.size());
    for (std::size_t i = 0; i < a.pairs.size(); ++i) {
        EXPECT_EQ(a.pairs[i].distance, b.pairs[i].distance);
        EXPECT_EQ(*a.pairs[i].distance % 2, 0u);
    }
    EXPECT_EQ(a.distance_histogram, b.distance_histogram);
    EXPECT_GT(ticks, 0u);
}

TEST(Enumerate, RespectsCap) {
    EXPECT_THROW(enumerate_self_dual(GaloisField::make(3), 8, {.cap = 1u << 20}), WorkloadError);
    EXPECT_THROW(enumerate_self_dual(GaloisField::make(3), 6), ValidationError);
}

TEST(Search, OrderedByDistanceThenPair) {
    const auto top = search_best(GaloisField::make(3), 5, 10);
    ASSERT_EQ(top.size(), 10u);
    for (std::size_t i = 1; i < top.size(); ++i) {
        const auto& x = top[i - 1];
        const auto& y = top[i];
        ASSERT_TRUE(*x.distance > *y.distance || (*x.distance == *y.distance && std::pair{x.a, x.b} < std::pair{y.a, y.b}));
    }
    const auto all = enumerate_self_dual(GaloisField::make(3), 5, {.with_distances = true});
    EXPECT_EQ(*top[0].distance, all.distance_histogram.rbegin()->first);
}

TEST(Membership, UnitCaseReproducesGenerator) {
    auto F = GaloisField::make(2);
    const auto x = ring(F, {0, 1, 0}), zero = RingElem(F, 3), one = RingElem::one(F, 3);
    const FourCirculantCode code(x, zero);
    const auto u = code.encode(one, zero);
    const auto sol = solve_generator(u);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(sol->first, x);
    EXPECT_EQ(sol->second, zero);
    const auto r = membership_census(F, 3, u);
    EXPECT_TRUE(r.unique);
    EXPECT_TRUE(r.solution_verified);
}

TEST(Membership, UnitSolutionNeedsReciprocalOfE) {
    // the b-formula is only right with e' in place of e
    auto F = GaloisField::make(3);
    const std::size_t n = 5;
    const auto a = ring(F, {1, 2, 0, 0, 1}), b = ring(F, {0, 1, 1, 0, 2});
    const FourCirculantCode code(a, b);
    int units = 0, literal_wrong = 0;
    for (std::uint64_t ci = 0; ci < 243; ci += 7)
        for (std::uint64_t di = 1; di < 243; di += 11) {
            const auto c = RingElem::from_index(F, n, ci), d = RingElem::from_index(F, n, di);
            const auto u = code.encode(c, d);
            const auto sol = solve_generator(u);
            const auto inv = ring_inverse(c * reciprocal(c) + d * reciprocal(d));
            ASSERT_EQ(sol.has_value(), inv.has_value());
            if (!sol) continue;
            ++units;
            ASSERT_EQ(sol->first, a);
            ASSERT_EQ(sol->second, b);
            const RingElem literal_b = (u.f * reciprocal(c) - d * u.e) * *inv;
            literal_wrong += !(literal_b == b);
        }
    EXPECT_GT(units, 100);
    EXPECT_GT(literal_wrong, 0);
}

TEST(Membership, ZeroMessageBlocks) {
    auto F = GaloisField::make(2);
    const auto zero = RingElem(F, 3), x = ring(F, {0, 1, 0});
    const auto r = membership_census(F, 3, {zero, zero, x, zero});
    EXPECT_EQ(r.count, 0u);
    EXPECT_FALSE(r.unique);
    EXPECT_EQ(membership_census(F, 3, Codeword::zero(F, 3)).count, 64u);
}

TEST(Membership, CensusAgreesWithContains) {
    auto F = GaloisField::make(2);
    const std::size_t n = 3;
    const auto c = ring(F, {1, 1, 0}), d = ring(F, {1, 0, 0}), e = ring(F, {0, 1, 1}), f = ring(F, {1, 0, 1});
    const Codeword u{c, d, e, f};
    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a < 8; ++a)
        for (std::uint64_t b = 0; b < 8; ++b)
            count += FourCirculantCode(RingElem::from_index(F, n, a), RingElem::from_index(F, n, b)).contains(u);
    EXPECT_EQ(membership_census(F, n, u).count, count);
}

TEST(Membership, ProfileOverBinaryLengthThree) {
    const auto prof = membership_profile(GaloisField::make(2), 3);
    EXPECT_EQ(prof.bound, 8u);
    EXPECT_EQ(prof.vectors, 6u * 6u * 64u);
    EXPECT_LE(prof.max_count_self_dual, prof.bound);
    EXPECT_LE(prof.max_count_coprime, prof.bound);
    EXPECT_EQ(prof.violations_self_dual, 0u);
    EXPECT_EQ(prof.violations_coprime, 0u);
    EXPECT_EQ(prof.unit_cases, prof.unit_reproduced);
    EXPECT_GT(prof.unit_cases, 0u);
    // over all generator pairs, u = (1 + x, 1 + x, 0, 0) lies in 16 codes
    EXPECT_EQ(prof.max_count, 16u);
    const auto x1 = ring(GaloisField::make(2), {1, 1, 0}), zero = RingElem(GaloisField::make(2), 3);
    EXPECT_EQ(membership_census(GaloisField::make(2), 3, {x1, x1, zero, zero}).count, 16u);
}

TEST(Membership, ProfileMatchesPointwiseCensus) {
    auto F = GaloisField::make(2);
    const auto prof = membership_profile(F, 3);
    std::uint64_t max_count = 0, vectors = 0;
    for (std::uint64_t c = 0; c < 8; ++c)
        for (std::uint64_t d = 0; d < 8; ++d) {
            const auto rc = RingElem::from_index(F, 3, c), rd = RingElem::from_index(F, 3, d);
            if (is_constant_vector(rc) || is_constant_vector(rd)) continue;
            for (std::uint64_t e = 0; e < 8; ++e)
                for (std::uint64_t f = 0; f < 8; ++f) {
                    ++vectors;
                    const auto r = membership_census(F, 3, {rc, rd, RingElem::from_index(F, 3, e), RingElem::from_index(F, 3, f)});
                    max_count = std::max(max_count, r.count);
                }
        }
    EXPECT_EQ(prof.vectors, vectors);
    EXPECT_EQ(prof.max_count, max_count);
}

// Multiplicative order by repeated multiplication.
std::uint64_t order_by_stepping(std::uint64_t q, std::uint64_t n) {
    std::uint64_t x = q % n, k = 1;
    while (x != 1) {
        x = x * q % n;
        ++k;
    }
    return k;
}

TEST(Artin, Examples) {
    EXPECT_EQ(artin_scan(2, 30).primes, (std::vector<std::uint64_t>{3, 5, 11, 13, 19, 29}));
    EXPECT_EQ(artin_scan(3, 10).primes, (std::vector<std::uint64_t>{5, 7}));
    const auto four = artin_scan(4, 30);
    EXPECT_TRUE(four.q_is_square);
    EXPECT_TRUE(std::none_of(four.primes.begin(), four.primes.end(), [](auto n) { return n > 3; }));
    EXPECT_THROW(artin_scan(1, 10), ValidationError);
}

TEST(Artin, MatchesOrderOracle) {
    for (std::uint64_t q : {2u, 3u, 5u, 7u, 8u, 10u}) {
        const auto scan = artin_scan(q, 2000);
        std::vector<std::uint64_t> want;
        std::uint64_t eligible = 0;
        for (std::uint64_t n = 3; n <= 2000; n += 2) {
            bool prime = true;
            for (std::uint64_t d = 3; d * d <= n; d += 2) prime = prime && n % d != 0;
            if (!prime || q % n == 0) continue;
            ++eligible;
            if (order_by_stepping(q, n) == n - 1) want.push_back(n);
        }
        EXPECT_EQ(scan.primes, want) << "q=" << q;
        EXPECT_EQ(scan.eligible, eligible);
    }
}

}  // namespace
