// Copyright 2026 The bupoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bupoly/search.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>

using namespace bupoly;

namespace {

std::vector<Poly> polys_of(const std::vector<BupRecord>& records) {
    std::vector<Poly> out;
    for (const auto& r : records) out.push_back(r.poly);
    return out;
}

BupRecord record_of(std::string_view name) {
    return make_bup_record(named_entry(name).factorization);
}

}  // namespace

TEST_CASE("make_bup_record fills labels and rejects non-bup input") {
    const BupRecord c1 = record_of("C1");
    CHECK(c1.label == "C1");
    CHECK(c1.omega == 3);
    CHECK(c1.degree == 9);
    CHECK(c1.conjugate_label.empty());  // the conjugate of C1 is not named
    const BupRecord c3 = record_of("C3");
    CHECK(c3.conjugate_label == "C3");  // self-conjugate
    CHECK_THROWS_AS(make_bup_record(factorize(Poly::x())), std::invalid_argument);
}

TEST_CASE("conjugate_closure") {
    CHECK(conjugate_closure({}).empty());

    const auto only_c3 = conjugate_closure({record_of("C3")});
    REQUIRE(only_c3.size() == 1);  // self-conjugate appears once
    CHECK(only_c3[0].poly == named_entry("C3").poly);

    const auto c1_pair = conjugate_closure({record_of("C1")});
    REQUIRE(c1_pair.size() == 2);
    CHECK(polys_of(c1_pair) ==
          std::vector<Poly>{parse_poly("x^4*(x+1)^3*(x^2+x+1)"), named_entry("C1").poly});
}

TEST_CASE("expected hit sets derived from the catalog") {
    CHECK(expected_omega3().size() == 12);
    CHECK(expected_omega4_mersenne().size() == 9);
    CHECK(expected_omega4_nonmersenne().size() == 4);
    // Degree filter: C1 (degree 9) is within (12, 3); C8 (degree 24) is not.
    const auto blind12 = expected_blind(12, 3);
    CHECK(blind12.size() == 8);
    const auto polys = polys_of(blind12);
    CHECK(std::count(polys.begin(), polys.end(), named_entry("C1").poly) == 1);
}

TEST_CASE("two-prime family membership") {
    for (int a : {1, 2, 3, 7, 15, 31, 63}) CHECK(is_two_prime_family_exponent(a));
    for (int a : {4, 5, 6, 8, 12, 16, 62}) CHECK_FALSE(is_two_prime_family_exponent(a));
}

TEST_CASE("omega-3 bounded search finds exactly the conjugate closure of C1..C7") {
    const SearchReport report = search_omega3();
    CHECK(report.pass);
    CHECK(report.hits.size() == 12);
    CHECK(report.candidate_count == 2028);
    const auto polys = polys_of(report.hits);
    CHECK(std::count(polys.begin(), polys.end(), parse_poly("x^3*(x+1)^4*(x^2+x+1)")) == 1);
    CHECK(std::count(polys.begin(), polys.end(), parse_poly("x^7*(x+1)^9*(x^4+x^3+1)^2")) == 1);
    CHECK(polys == polys_of(expected_omega3()));
}

TEST_CASE("omega-4 Mersenne search finds exactly the conjugate closure of C8..C13") {
    const SearchReport report = search_omega4_mersenne();
    CHECK(report.pass);
    CHECK(report.hits.size() == 9);
    const auto polys = polys_of(report.hits);
    CHECK(std::count(polys.begin(), polys.end(),
                     parse_poly("x^8*(x+1)^8*(x^4+x^3+1)*(x^4+x^3+x^2+x+1)")) == 1);
    CHECK(std::count(polys.begin(), polys.end(),
                     parse_poly("x^14*(x+1)^14*(x^3+x+1)^2*(x^3+x^2+1)^2")) == 1);
}

TEST_CASE("omega-4 non-Mersenne search: two empty sub-cases, then D1, D2") {
    const SearchReport report = search_omega4_nonmersenne();
    CHECK(report.pass);
    REQUIRE(report.subcases.size() == 3);
    CHECK(report.subcases[0].hits.empty());
    CHECK(report.subcases[0].pass);
    CHECK(report.subcases[1].hits.empty());
    CHECK(report.subcases[1].pass);
    CHECK(report.subcases[2].hits.size() == 4);
    CHECK(report.hits.size() == 4);
    const auto polys = polys_of(report.hits);
    CHECK(std::count(polys.begin(), polys.end(), named_entry("D1").poly) == 1);
    CHECK(std::count(polys.begin(), polys.end(), named_entry("D2").poly) == 1);
}

TEST_CASE("blind search at (12, 3) matches the degree-filtered expectation") {
    const SearchReport report = blind_search(12, 3);
    CHECK(report.pass);
    CHECK(polys_of(report.hits) == polys_of(expected_blind(12, 3)));
    CHECK(report.space.max_degree == 12);
    CHECK(report.space.max_omega == 3);
}

TEST_CASE("blind search at (14, 4) keeps x^7(x+1)^7 and stays clean") {
    const SearchReport report = blind_search(14, 4);
    CHECK(report.pass);
    const auto polys = polys_of(report.hits);
    CHECK(std::count(polys.begin(), polys.end(), parse_poly("x^7*(x+1)^7")) == 1);
    // Soundness and conjugation closure of the hit set.
    for (const BupRecord& hit : report.hits) {
        CHECK(sigma_bistar(hit.factorization) == hit.poly);
        CHECK(sigma_bistar_oracle(hit.factorization) == hit.poly);
        CHECK(std::count(polys.begin(), polys.end(), translate(hit.poly)) == 1);
    }
}

TEST_CASE("blind search at (24, 2) finds the two-prime family within the degree bound") {
    const SearchReport report = blind_search(24, 2);
    CHECK(report.pass);
    // x^15(x+1)^15 has degree 30 and must stay outside the degree-24 bound.
    CHECK(polys_of(report.hits) ==
          std::vector<Poly>{parse_poly("x*(x+1)"), parse_poly("x^2*(x+1)^2"),
                            parse_poly("x^3*(x+1)^3"), parse_poly("x^7*(x+1)^7")});
}

TEST_CASE("blind search validates its bounds") {
    CHECK_THROWS_AS(blind_search(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(blind_search(30, 3), std::invalid_argument);  // above the ceiling
    CHECK_THROWS_AS(blind_search(12, 5), std::invalid_argument);
    CHECK_THROWS_AS(blind_search(12, 1), std::invalid_argument);
    SearchOptions raised;
    raised.blind_ceiling = 26;
    CHECK(blind_search(25, 2, raised).pass);
}

TEST_CASE("searches are deterministic across thread counts") {
    SearchOptions serial;
    serial.threads = 1;
    SearchOptions wide;
    wide.threads = 4;
    const SearchReport a = blind_search(12, 4, serial);
    const SearchReport b = blind_search(12, 4, wide);
    CHECK(a.candidate_count == b.candidate_count);
    CHECK(polys_of(a.hits) == polys_of(b.hits));
    const SearchReport c = search_omega3(serial);
    const SearchReport d = search_omega3(wide);
    CHECK(c.candidate_count == d.candidate_count);
    CHECK(polys_of(c.hits) == polys_of(d.hits));
}

TEST_CASE("is_ibup") {
    CHECK(is_ibup(make_bup_record(factorize(parse_poly("x^3*(x+1)^3")))));
    CHECK(is_ibup(record_of("C1")));
    CHECK(is_ibup(make_bup_record(factorize(parse_poly("x^2*(x+1)^2")))));
    // Every bi-unitary perfect polynomial over F2 is divisible by x(x+1), so
    // no coprime split can have two bi-unitary perfect parts.
    for (const CatalogEntry& e : named_constants()) {
        if (e.name[0] == 'C' || e.name[0] == 'D') CHECK(is_ibup(record_of(e.name)));
    }
}

TEST_CASE("negative control: perturbed catalog exponents are never hits") {
    const Poly mutated = parse_poly("x^8*(x+1)^8*(x^4+x^3+1)");  // C6 with x^7 -> x^8
    CHECK_FALSE(is_bup(mutated));
}

TEST_CASE("verify_theorems aggregates every verdict") {
    const VerifyReport report = verify_theorems();
    CHECK(report.catalog_pass);
    CHECK(report.consistency_pass);  // blind route == bounded routes + family
    REQUIRE(report.reports.size() == 4);
    for (const SearchReport& r : report.reports) CHECK(r.pass);
    CHECK(report.pass);
    CHECK(report.verdict() == "pass");

    const nlohmann::json j = to_json(report);
    CHECK(j["verdict"] == "pass");
    CHECK(j["catalog"] == "pass");
    CHECK(j["bounded_vs_blind"] == "pass");
    REQUIRE(j["reports"].is_array());
    CHECK(j["reports"].size() == 4);
    CHECK(j["reports"][0]["case_id"] == "omega3");
    CHECK(j["reports"][2]["subcases"].size() == 3);
}

TEST_CASE("BUPOLY_THREADS steers the worker count without changing results") {
    setenv("BUPOLY_THREADS", "3", 1);
    const SearchReport via_env = search_omega3();  // threads = 0 resolves the env var
    unsetenv("BUPOLY_THREADS");
    const SearchReport direct = search_omega3();
    CHECK(polys_of(via_env.hits) == polys_of(direct.hits));
    CHECK(via_env.candidate_count == direct.candidate_count);
}
