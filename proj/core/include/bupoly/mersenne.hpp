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

#pragma once

#include "bupoly/divisor_sums.hpp"

#include <optional>
#include <string_view>

namespace bupoly {

/// An irreducible polynomial of the shape 1 + x^a(x+1)^b with a, b >= 1.
/// Irreducibility forces gcd(a, b) == 1 (a common divisor d > 1 would make
/// 1 + y^d with y = x^(a/d)(x+1)^(b/d), which 1 + y divides).
struct MersennePrime {
    Poly poly;
    int a = 0;
    int b = 0;
};

/// Recognize a Mersenne prime and recover its witness exponents by factoring
/// p + 1 over {x, x+1}, robust to however the input was produced. Returns
/// nullopt when p is reducible or p + 1 has any other factor.
std::optional<MersennePrime> is_mersenne_prime(const Poly& p);

/// All Mersenne primes of degree <= max_degree (scan of a + b <= max_degree
/// with gcd(a, b) = 1, irreducibility-checked), in (degree, mask) order.
std::vector<MersennePrime> enumerate_mersenne(int max_degree);

/// A named polynomial from the built-in catalog of bi-unitary perfect
/// polynomials and their irreducible building blocks.
struct CatalogEntry {
    std::string name;
    Factorization factorization;
    Poly poly;
};

/// The catalog: the Mersenne primes M1..M5, the non-Mersenne irreducible S1,
/// and the known bi-unitary perfect polynomials C1..C13, D1, D2 with three
/// or four irreducible factors. Built and self-checked on first use: every
/// M/S entry must be irreducible and every C/D entry must satisfy
/// sigma**(A) = A, so a typo in the table cannot ship.
const std::vector<CatalogEntry>& named_constants();

/// Case-insensitive lookup; nullptr when the name is unknown.
const CatalogEntry* find_named(std::string_view name);

/// Lookup that throws std::invalid_argument on unknown names.
const CatalogEntry& named_entry(std::string_view name);

/// Catalog name of this exact polynomial, or "" if it is not named.
std::string name_of(const Poly& p);

}  // namespace bupoly
