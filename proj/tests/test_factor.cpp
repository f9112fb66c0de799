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

#include "bupoly/factor.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace bupoly;

namespace {

// Independent irreducibility oracle: trial division by every polynomial of
// degree 1..n/2.
bool irreducible_by_trial_division(const Poly& p) {
    const int n = p.degree();
    for (std::uint64_t mask = 2; mask < (std::uint64_t{2} << (n / 2)); ++mask) {
        if ((p % Poly::from_mask(mask)).is_zero()) return false;
    }
    return true;
}

int mobius(int n) {
    int result = 1;
    for (int q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            n /= q;
            if (n % q == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

// Number of degree-n irreducibles over F2: (1/n) * sum_{d|n} mu(n/d) 2^d.
long long necklace_count(int n) {
    long long sum = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d == 0) sum += mobius(n / d) * (1ll << d);
    }
    return sum / n;
}

}  // namespace

TEST_CASE("is_irreducible on known inputs") {
    CHECK(is_irreducible(parse_poly("1+x^5+x^10+x^15+x^20")));
    CHECK_FALSE(is_irreducible(parse_poly("x^2+1")));
    CHECK(is_irreducible(parse_poly("1+x+x^4")));  // S1
    CHECK(is_irreducible(Poly::x()));
    CHECK(is_irreducible(Poly::x_plus_one()));
    CHECK_FALSE(is_irreducible(parse_poly("1+x^5+x^10")));
    CHECK_THROWS_AS(is_irreducible(Poly::one()), std::domain_error);
    CHECK_THROWS_AS(is_irreducible(Poly::zero()), std::domain_error);
}

TEST_CASE("is_irreducible agrees with trial division up to degree 16") {
    for (int n = 1; n <= 16; ++n) {
        for (std::uint64_t mask = std::uint64_t{1} << n; mask < (std::uint64_t{2} << n); ++mask) {
            const Poly p = Poly::from_mask(mask);
            if (is_irreducible(p) != irreducible_by_trial_division(p)) {
                CAPTURE(to_string(p));
                FAIL("irreducibility mismatch");
            }
        }
    }
}

TEST_CASE("irreducible counts match the necklace formula up to degree 12") {
    for (int n = 1; n <= 12; ++n)
        CHECK(static_cast<long long>(irreducibles_of_degree(n).size()) == necklace_count(n));
}

TEST_CASE("factorize on known inputs") {
    const Factorization f = factorize(parse_poly("1+x^5+x^10"));
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0].prime == parse_poly("x^2+x+1"));
    CHECK(f.factors[1].prime == parse_poly("x^4+x+1"));
    CHECK(f.factors[2].prime == parse_poly("x^4+x^3+1"));
    for (const auto& pp : f.factors) CHECK(pp.exp == 1);

    const Factorization g = factorize(parse_poly("x^3+1"));
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0].prime == Poly::x_plus_one());
    CHECK(g.factors[1].prime == parse_poly("x^2+x+1"));

    const Factorization h = factorize(parse_poly("x^4+1"));
    REQUIRE(h.factors.size() == 1);
    CHECK(h.factors[0].prime == Poly::x_plus_one());
    CHECK(h.factors[0].exp == 4);

    CHECK(factorize(Poly::one()).factors.empty());
    CHECK_THROWS_AS(factorize(Poly::zero()), std::domain_error);
}

TEST_CASE("factorize round-trips and is canonical") {
    std::mt19937_64 rng(0x5eed0011);
    for (int iter = 0; iter < 1000; ++iter) {
        const Poly p = test::random_poly(rng, 40);
        const Factorization f = factorize(p);
        CHECK(expand(f.factors) == p);
        CHECK(f.source == p);
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            CHECK(is_irreducible(f.factors[i].prime));
            CHECK(f.factors[i].exp >= 1);
            if (i > 0) CHECK(f.factors[i - 1].prime < f.factors[i].prime);
        }
        // Reproducible output.
        CHECK(factorize(p) == f);
    }
}

TEST_CASE("omega") {
    CHECK(omega(parse_poly("x^3*(x+1)^4*(x^2+x+1)")) == 3);  // C1
    CHECK(omega(parse_poly("x^4+1")) == 1);
    CHECK(omega(parse_poly("x^4*(x+1)^5*(x^2+x+1)^4*(x^4+x+1)")) == 4);  // D1
    CHECK(omega(Poly::one()) == 0);
    CHECK_THROWS_AS(omega(Poly::zero()), std::domain_error);
}

TEST_CASE("is_odd_poly") {
    CHECK(is_odd_poly(parse_poly("x^2+x+1")));
    CHECK_FALSE(is_odd_poly(Poly::x()));
    CHECK_FALSE(is_odd_poly(parse_poly("x^2+1")));
    CHECK_FALSE(is_odd_poly(Poly::zero()));
    CHECK(is_odd_poly(Poly::one()));
}

TEST_CASE("make_factorization sorts, merges and validates") {
    const Poly m1 = parse_poly("x^2+x+1");
    const Factorization f =
        make_factorization({{m1, 1}, {Poly::x(), 3}, {Poly::x(), 1}, {Poly::x_plus_one(), 4}});
    CHECK(f.factors.size() == 3);
    CHECK(f.factors[0].prime == Poly::x());
    CHECK(f.factors[0].exp == 4);
    CHECK(f.source == parse_poly("x^4*(x+1)^4*(x^2+x+1)"));
    CHECK_THROWS_AS(make_factorization({{parse_poly("x^2+1"), 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_factorization({{m1, 0}}), std::invalid_argument);
}
