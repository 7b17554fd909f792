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

#include <gtest/gtest.h>

#include "fourcirc.hpp"
#include "fourcirc/report.hpp"

namespace {

using namespace fourcirc;
using fourcirc::json;

TEST(Report, EnvelopeCarriesSchemaManifestAndBody) {
    auto F = GaloisField::make(2);
    const RunManifest m{"fourcirc factor --q 2 --n 7", F, 1000, 2, 1.5};
    const auto doc = report::envelope("factor", m, report::factorization(factor_xn_minus_1(7, F)));
    EXPECT_EQ(doc.at("schema"), "fourcirc.factor/1");
    EXPECT_EQ(doc.at("manifest").at("cap"), 1000);
    EXPECT_EQ(doc.at("manifest").at("workers"), 2);
    EXPECT_EQ(doc.at("manifest").at("field").at("q"), 2);
    EXPECT_EQ(doc.at("manifest").at("version"), kVersion);
    EXPECT_EQ(doc.at("report").at("degrees"), json::array({1, 3, 3}));
    EXPECT_EQ(doc.at("report").at("pairs").at(0), json::parse("[[1,0,1,1],[1,1,0,1]]"));
}

TEST(Report, JsonRoundTrips) {
    auto F = GaloisField::make(3);
    const auto census = report::census(enumerate_self_dual(F, 5, {.with_distances = true}));
    EXPECT_EQ(json::parse(census.dump()), census);
    const auto bound = report::bound(expurgation_bound(*GaloisField::make(2), 13));
    EXPECT_EQ(json::parse(bound.dump(2)), bound);
    const FourCirculantCode code(RingElem::x_pow(F, 5, 1), RingElem::one(F, 5));
    const json crt = {{"constituents", report::constituents(decompose(code))}};
    EXPECT_EQ(json::parse(crt.dump()), crt);
}

TEST(Report, BigIntegersBecomeStrings) {
    EXPECT_EQ(report::big(BigInt(42)), json(42));
    EXPECT_EQ(report::big(big_pow(2, 70)), json("1180591620717411303424"));
}

TEST(Report, CheckBody) {
    auto F = GaloisField::make(2);
    const auto body = report::check(FourCirculantCode(RingElem::x_pow(F, 3, 1), RingElem(F, 3)));
    EXPECT_EQ(body.at("self_dual"), true);
    EXPECT_EQ(body.at("lcd"), false);
    EXPECT_EQ(body.at("self_dual_matrix"), true);
}

TEST(Csv, EnumerateHeaderAndRows) {
    const auto body = report::census(enumerate_self_dual(GaloisField::make(2), 3));
    const auto csv = report::to_csv("enumerate", body);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "a,b,distance");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 13);
    EXPECT_NE(csv.find("\"0,1,0\",\"0,0,0\",\n"), std::string::npos);
}

TEST(Csv, OtherSchemas) {
    const auto artin = report::to_csv("artin", report::artin(3, 10, artin_scan(3, 10)));
    EXPECT_EQ(artin, "prime\n5\n7\n");
    const auto bound = report::to_csv("bound", report::bound(expurgation_bound(*GaloisField::make(2), 13)));
    EXPECT_EQ(bound, "d,bad_bound\n0,0\n1,425984\n2,11288576\n");
    const auto counts = report::to_csv("counts", report::counts("x^2 + y^2 = -1", 7, count_sum_of_squares(*GaloisField::make(7))));
    EXPECT_EQ(counts, "key,value\nidentity,x^2 + y^2 = -1\nq,7\nbrute_force,8\nformula,8\nagree,true\n");
}

TEST(Text, FactorisationLine) {
    const auto body = report::factorization(factor_xn_minus_1(7, GaloisField::make(3)));
    const auto text = report::to_text("factor", body);
    EXPECT_EQ(text.substr(0, text.find('\n')), "x^7 - 1 = (2 + x) (1 + x + x^2 + x^3 + x^4 + x^5 + x^6)");
    EXPECT_NE(text.find("degrees: [1,6]"), std::string::npos);
    EXPECT_EQ(report::poly_text(json::array({0, 0, 2})), "2x^2");
    EXPECT_EQ(report::poly_text(json::array({0})), "0");
}

}  // namespace
