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

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "fourcirc/four_circulant.hpp"

namespace {

using namespace fourcirc;

RingElem ring(const FieldPtr& F, std::vector<std::uint32_t> c) {
    std::vector<FieldElem> v;
    for (auto x : c) v.push_back(F->element(x));
    return RingElem(F, std::move(v));
}

// m * G with plain field arithmetic; m = (c, d) as a length-2n row.
std::vector<FieldElem> times_generator(const Matrix& g, const std::vector<FieldElem>& m) {
    const auto& F = *g.field();
    std::vector<FieldElem> out(g.cols());
    for (std::size_t j = 0; j < g.cols(); ++j)
        for (std::size_t i = 0; i < g.rows(); ++i) out[j] = F.add(out[j], F.mul(m[i], g(i, j)));
    return out;
}

std::vector<FieldElem> message(const FieldPtr& F, std::size_t n, std::uint64_t index) {
    const std::uint64_t qn = checked_pow(F->q(), n);
    const auto c = RingElem::from_index(F, n, index / qn), d = RingElem::from_index(F, n, index % qn);
    std::vector<FieldElem> m(c.coeffs().begin(), c.coeffs().end());
    m.insert(m.end(), d.coeffs().begin(), d.coeffs().end());
    return m;
}

std::size_t weight(const std::vector<FieldElem>& v) {
    std::size_t w = 0;
    for (auto x : v) w += x.value != 0;
    return w;
}

struct OracleDistance {
    std::size_t distance;
    std::uint64_t index;
};

// Scans messages from the top down and keeps the last minimum seen, so the
// least index wins ties.
OracleDistance oracle_distance(const FourCirculantCode& code) {
    const auto g = code.generator_matrix();
    const std::uint64_t total = checked_pow(code.field()->q(), 2 * code.n());
    OracleDistance best{SIZE_MAX, 0};
    for (std::uint64_t i = total; i-- > 1;) {
        const auto w = weight(times_generator(g, message(code.field(), code.n(), i)));
        if (w <= best.distance) best = {w, i};
    }
    return best;
}

TEST(Circulant, RowsShiftRight) {
    auto F = GaloisField::make(3);
    const auto m = Circulant(ring(F, {1, 2, 0})).expand();
    EXPECT_EQ(m(0, 0).value, 1u);
    EXPECT_EQ(m(0, 1).value, 2u);
    EXPECT_EQ(m(1, 2).value, 2u);
    EXPECT_EQ(m(2, 0).value, 2u);
    EXPECT_EQ(m(2, 2).value, 1u);
    EXPECT_EQ(m.transpose(), Circulant(reciprocal(ring(F, {1, 2, 0}))).expand());
}

TEST(Encode, Examples) {
    auto F = GaloisField::make(2);
    const FourCirculantCode code(ring(F, {0, 1, 0}), ring(F, {0, 0, 0}));
    const auto one = RingElem::one(F, 3), zero = RingElem(F, 3);
    const auto u = code.encode(one, zero);
    EXPECT_EQ(u, (Codeword{one, zero, ring(F, {0, 1, 0}), zero}));
    EXPECT_EQ(u.weight(), 2u);
    EXPECT_EQ(code.encode(zero, one), (Codeword{zero, one, -reciprocal(code.b()), reciprocal(code.a())}));
}

TEST(Encode, MatchesGeneratorMatrixProduct) {
    std::mt19937_64 rng(1);
    for (auto F : {GaloisField::make(2), GaloisField::make(3), GaloisField::make(2, 2), GaloisField::make(5)})
        for (std::size_t n = 1; n <= 6; ++n) {
            const std::uint64_t qn = checked_pow(F->q(), n);
            std::uniform_int_distribution<std::uint64_t> pick(0, qn - 1);
            for (int trial = 0; trial < 10; ++trial) {
                const FourCirculantCode code(RingElem::from_index(F, n, pick(rng)), RingElem::from_index(F, n, pick(rng)));
                const auto g = code.generator_matrix();
                const std::uint64_t idx = pick(rng) * qn + pick(rng);
                const auto m = message(F, n, idx);
                const auto u = code.encode(RingElem::from_index(F, n, idx / qn), RingElem::from_index(F, n, idx % qn));
                ASSERT_EQ(u.flatten(), times_generator(g, m));
                ASSERT_TRUE(code.contains(u));
            }
        }
}

TEST(SelfDual, Examples) {
    auto F = GaloisField::make(2);
    const FourCirculantCode sd(ring(F, {0, 1, 0}), ring(F, {0, 0, 0}));
    const FourCirculantCode zero(ring(F, {0, 0, 0}), ring(F, {0, 0, 0}));
    EXPECT_TRUE(sd.is_self_dual_poly());
    EXPECT_TRUE(sd.is_self_dual_matrix());
    EXPECT_FALSE(zero.is_self_dual_poly());
    EXPECT_FALSE(zero.is_self_dual_matrix());
}

TEST(SelfDual, PolynomialAndMatrixCriteriaAgreeExhaustively) {
    for (auto [q, n] : {std::pair{2u, 3u}, {2u, 5u}, {3u, 3u}, {3u, 5u}, {5u, 3u}}) {
        auto F = GaloisField::make(q);
        const std::uint64_t qn = checked_pow(q, n);
        std::uint64_t agree = 0, self_dual = 0;
        for (std::uint64_t a = 0; a < qn; ++a)
            for (std::uint64_t b = 0; b < qn; ++b) {
                const FourCirculantCode code(RingElem::from_index(F, n, a), RingElem::from_index(F, n, b));
                const bool poly = code.is_self_dual_poly();
                ASSERT_EQ(poly, code.is_self_dual_matrix()) << "q=" << q << " n=" << n << " a=" << a << " b=" << b;
                ++agree;
                self_dual += poly;
            }
        EXPECT_EQ(agree, qn * qn);
        if (n != q) {
            EXPECT_GT(self_dual, 0u);
        }
    }
}

TEST(Lcd, Examples) {
    auto F = GaloisField::make(2);
    EXPECT_TRUE(FourCirculantCode(ring(F, {0, 1, 0}), ring(F, {1, 0, 0})).is_lcd());
    EXPECT_FALSE(FourCirculantCode(ring(F, {0, 1, 0}), ring(F, {0, 0, 0})).is_lcd());
}

TEST(Lcd, ExcludesSelfDual) {
    for (auto F : {GaloisField::make(2), GaloisField::make(3)})
        for (std::uint64_t a = 0; a < checked_pow(F->q(), 3); ++a)
            for (std::uint64_t b = 0; b < checked_pow(F->q(), 3); ++b) {
                const FourCirculantCode code(RingElem::from_index(F, 3, a), RingElem::from_index(F, 3, b));
                ASSERT_FALSE(code.is_lcd() && code.is_self_dual_poly());
            }
}

TEST(MinDistance, Example) {
    auto F = GaloisField::make(2);
    const FourCirculantCode code(ring(F, {0, 1, 0}), ring(F, {0, 0, 0}));
    const auto r = code.min_distance();
    EXPECT_EQ(r.distance, 2u);
    EXPECT_EQ(r.witness.weight(), 2u);
    EXPECT_TRUE(code.contains(r.witness));
    EXPECT_NE(r.message_index, 0u);
}

TEST(MinDistance, MatchesGeneratorEnumerationOracle) {
    std::mt19937_64 rng(17);
    for (auto [q, n] : {std::pair{2u, 3u}, {2u, 4u}, {3u, 3u}, {2u, 5u}, {4u, 2u}, {5u, 2u}}) {
        const auto F = q == 4 ? GaloisField::make(2, 2) : GaloisField::make(q);
        const std::uint64_t qn = checked_pow(q, n);
        std::uniform_int_distribution<std::uint64_t> pick(0, qn - 1);
        for (int trial = 0; trial < 6; ++trial) {
            const FourCirculantCode code(RingElem::from_index(F, n, pick(rng)), RingElem::from_index(F, n, pick(rng)));
            const auto got = code.min_distance();
            const auto want = oracle_distance(code);
            ASSERT_EQ(got.distance, want.distance);
            ASSERT_EQ(got.message_index, want.index);
            ASSERT_EQ(got.witness.weight(), got.distance);
        }
    }
}

TEST(MinDistance, BinarySelfDualCodesAreEvenAndWorkerIndependent) {
    auto F = GaloisField::make(2);
    std::size_t codes = 0;
    for (std::size_t n : {3u, 5u}) {
        const std::uint64_t qn = checked_pow(2, n);
        for (std::uint64_t a = 0; a < qn; ++a)
            for (std::uint64_t b = 0; b < qn; ++b) {
                const FourCirculantCode code(RingElem::from_index(F, n, a), RingElem::from_index(F, n, b));
                if (!code.is_self_dual_poly()) continue;
                ++codes;
                const auto seq = code.min_distance({.workers = 1});
                const auto par = code.min_distance({.workers = 4});
                ASSERT_EQ(seq.distance % 2, 0u);
                ASSERT_EQ(seq.distance, par.distance);
                ASSERT_EQ(seq.message_index, par.message_index);
                ASSERT_EQ(seq.witness, par.witness);
            }
    }
    EXPECT_EQ(codes, 12u + 120u);
}

TEST(MinDistance, RespectsCap) {
    auto F = GaloisField::make(3);
    const FourCirculantCode code(RingElem(F, 8), RingElem(F, 8));
    EXPECT_THROW(code.min_distance({.cap = 1000}), WorkloadError);
}

TEST(Contains, Examples) {
    auto F = GaloisField::make(2);
    const FourCirculantCode code(ring(F, {0, 1, 0}), ring(F, {0, 0, 0}));
    const auto x = ring(F, {0, 1, 0}), zero = RingElem(F, 3), one = RingElem::one(F, 3);
    EXPECT_FALSE(code.contains({one, zero, x, x}));
    EXPECT_TRUE(code.contains(Codeword::zero(F, 3)));
}

TEST(Code, LinearAndInjective) {
    std::mt19937_64 rng(23);
    for (auto F : {GaloisField::make(3), GaloisField::make(2, 2)}) {
        const std::size_t n = 4;
        const std::uint64_t qn = checked_pow(F->q(), n);
        std::uniform_int_distribution<std::uint64_t> pick(0, qn - 1);
        const FourCirculantCode code(RingElem::from_index(F, n, pick(rng)), RingElem::from_index(F, n, pick(rng)));
        for (int trial = 0; trial < 50; ++trial) {
            const auto c1 = RingElem::from_index(F, n, pick(rng)), d1 = RingElem::from_index(F, n, pick(rng));
            const auto c2 = RingElem::from_index(F, n, pick(rng)), d2 = RingElem::from_index(F, n, pick(rng));
            const auto u = code.encode(c1, d1), v = code.encode(c2, d2), w = code.encode(c1 + c2, d1 + d2);
            ASSERT_EQ(w, (Codeword{u.c + v.c, u.d + v.d, u.e + v.e, u.f + v.f}));
            if (!(c1 == c2 && d1 == d2)) {
                ASSERT_FALSE(u == v);
            }
        }
        EXPECT_EQ(code.generator_matrix().rank(), 2 * n);
    }
}

TEST(Code, SelfDualCodewordsAreMutuallyOrthogonal) {
    auto F = GaloisField::make(3);
    const std::size_t n = 5;
    const std::uint64_t qn = checked_pow(3, n);
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<std::uint64_t> pick(0, qn - 1);
    int found = 0;
    for (std::uint64_t a = 0; a < qn && found < 5; ++a)
        for (std::uint64_t b = 0; b < qn && found < 5; ++b) {
            const FourCirculantCode code(RingElem::from_index(F, n, a), RingElem::from_index(F, n, b));
            if (!code.is_self_dual_poly()) continue;
            ++found;
            for (int trial = 0; trial < 20; ++trial) {
                const auto u = code.encode(RingElem::from_index(F, n, pick(rng)), RingElem::from_index(F, n, pick(rng)));
                const auto v = code.encode(RingElem::from_index(F, n, pick(rng)), RingElem::from_index(F, n, pick(rng)));
                ASSERT_EQ(inner_product(*F, u.flatten(), v.flatten()).value, 0u);
            }
        }
    EXPECT_EQ(found, 5);
}

TEST(Code, RejectsMismatchedInputs) {
    auto F2 = GaloisField::make(2), F3 = GaloisField::make(3);
    EXPECT_THROW(FourCirculantCode(RingElem(F2, 3), RingElem(F2, 4)), ValidationError);
    EXPECT_THROW(FourCirculantCode(RingElem(F2, 3), RingElem(F3, 3)), ValidationError);
    const FourCirculantCode code(RingElem(F2, 3), RingElem(F2, 3));
    EXPECT_THROW(code.encode(RingElem(F2, 4), RingElem(F2, 3)), ValidationError);
}

}  // namespace
