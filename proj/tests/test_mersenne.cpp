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

#include "bupoly/mersenne.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace bupoly;

TEST_CASE("is_mersenne_prime recovers the witness exponents") {
    const auto m2 = is_mersenne_prime(parse_poly("1+x+x^3"));
    REQUIRE(m2.has_value());
    CHECK(m2->a == 1);
    CHECK(m2->b == 2);

    const auto m4 = is_mersenne_prime(parse_poly("1+x+x^2+x^3+x^4"));
    REQUIRE(m4.has_value());
    CHECK(m4->a == 1);
    CHECK(m4->b == 3);

    const auto m5 = is_mersenne_prime(parse_poly("1+x^3+x^4"));
    REQUIRE(m5.has_value());
    CHECK(m5->a == 3);
    CHECK(m5->b == 1);

    CHECK_FALSE(is_mersenne_prime(parse_poly("1+x+x^4")).has_value());  // S1: 1+x(x+1)M1
    CHECK_FALSE(is_mersenne_prime(parse_poly("x^2+1")).has_value());    // reducible
    CHECK_FALSE(is_mersenne_prime(Poly::x()).has_value());              // degree too small
    CHECK_FALSE(is_mersenne_prime(Poly::zero()).has_value());
}

TEST_CASE("enumerate_mersenne") {
    const auto upto3 = enumerate_mersenne(3);
    REQUIRE(upto3.size() == 3);
    CHECK(upto3[0].poly == parse_poly("1+x+x^2"));
    CHECK(upto3[1].poly == parse_poly("1+x+x^3"));
    CHECK(upto3[2].poly == parse_poly("1+x^2+x^3"));

    const auto upto4 = enumerate_mersenne(4);
    REQUIRE(upto4.size() == 5);
    CHECK(upto4[3].poly == named_entry("M5").poly);
    CHECK(upto4[4].poly == named_entry("M4").poly);

    CHECK_THROWS_AS(enumerate_mersenne(1), std::invalid_argument);
}

TEST_CASE("enumerated Mersenne primes are odd, irreducible, coprime-witnessed") {
    for (const MersennePrime& m : enumerate_mersenne(10)) {
        CHECK(is_odd_poly(m.poly));
        CHECK(is_irreducible(m.poly));
        CHECK(m.a >= 1);
        CHECK(m.b >= 1);
        CHECK(std::gcd(m.a, m.b) == 1);
        CHECK(m.poly == Poly::one() + pow(Poly::x(), static_cast<unsigned>(m.a)) *
                            pow(Poly::x_plus_one(), static_cast<unsigned>(m.b)));
    }
}

TEST_CASE("the enumerated set is closed under conjugation") {
    const auto primes = enumerate_mersenne(12);
    std::set<Poly> masks;
    for (const auto& m : primes) masks.insert(m.poly);
    for (const auto& m : primes) CHECK(masks.contains(translate(m.poly)));
    // 1 + x(x+1)^7 is reducible, so it must be absent.
    CHECK_FALSE(masks.contains(parse_poly("1+x*(x+1)^7")));
}

TEST_CASE("1+x(x+1)^(2^v-1) is irreducible exactly for v in {1, 2}") {
    for (int v = 1; v <= 5; ++v) {
        const Poly p =
            Poly::one() + Poly::x() * pow(Poly::x_plus_one(), (1u << v) - 1);
        CHECK(is_irreducible(p) == (v <= 2));
    }
}

TEST_CASE("self-reciprocal Mersenne primes up to degree 12 are M1 and M4") {
    std::vector<Poly> self_reciprocal;
    for (const MersennePrime& m : enumerate_mersenne(12)) {
        if (reciprocal(m.poly) == m.poly) self_reciprocal.push_back(m.poly);
    }
    CHECK(self_reciprocal ==
          std::vector<Poly>{named_entry("M1").poly, named_entry("M4").poly});
}

TEST_CASE("irreducibility spot checks on degree-20 shapes") {
    // 1 + x^5 (x^5+1)^3 = 1 + x^5 + x^10 + x^15 + x^20 is irreducible.
    const Poly q = Poly::one() + Poly::monomial(5) * pow(Poly::monomial(5) + Poly::one(), 3);
    CHECK(q == parse_poly("1+x^5+x^10+x^15+x^20"));
    CHECK(is_irreducible(q));
    // 1 + x(x+1)^3 M4 is reducible.
    CHECK_FALSE(is_irreducible(parse_poly("1+x*(x+1)^3*(x^4+x^3+x^2+x+1)")));
}

TEST_CASE("named_constants catalog") {
    CHECK(named_constants().size() == 21);
    CHECK(named_entry("M5").poly == parse_poly("1+x^3+x^4"));
    CHECK(named_entry("C6").poly == parse_poly("x^7*(x+1)^8*(x^4+x^3+1)"));
    CHECK(named_entry("D1").poly == parse_poly("x^4*(x+1)^5*(x^2+x+1)^4*(x^4+x+1)"));
    CHECK(find_named("c13") != nullptr);  // case-insensitive
    CHECK(find_named("Z9") == nullptr);
    CHECK_THROWS_AS(named_entry("Z9"), std::invalid_argument);
    CHECK(name_of(named_entry("C2").poly) == "C2");
    CHECK(name_of(Poly::x()).empty());
}

TEST_CASE("every catalog C and D entry is bi-unitary perfect, and conjugates too") {
    int checked = 0;
    for (const CatalogEntry& e : named_constants()) {
        if (e.name[0] != 'C' && e.name[0] != 'D') continue;
        ++checked;
        CHECK(is_bup(e.poly));
        CHECK(is_bup(translate(e.poly)));
    }
    CHECK(checked == 15);
}

TEST_CASE("catalog identities with sigma") {
    // S1 = sigma(M1^2) and the q-sigma pool members used by the searches.
    const Poly m1 = named_entry("M1").poly;
    const Poly m4 = named_entry("M4").poly;
    CHECK(named_entry("S1").poly == sigma_prime_power(m1, 2));
    CHECK(Poly::one() + pow(Poly::x(), 3) * pow(Poly::x_plus_one(), 3) * m1 ==
          sigma_prime_power(m1, 4));
    CHECK(Poly::one() + Poly::x() * pow(Poly::x_plus_one(), 3) * pow(m1, 4) ==
          sigma_prime_power(Poly::x(), 12));
    CHECK(Poly::one() + Poly::x() * Poly::x_plus_one() * square(m4) ==
          sigma_prime_power(Poly::x(), 10));
    // PQ = sigma(x^8) for P = M1, Q = 1 + x^3 + x^6.
    CHECK(m1 * parse_poly("1+x^3+x^6") == sigma_prime_power(Poly::x(), 8));
    CHECK(is_irreducible(parse_poly("1+x^3+x^6")));
}
