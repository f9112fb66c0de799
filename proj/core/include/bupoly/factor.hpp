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

#include "bupoly/gf2poly.hpp"

#include <vector>

namespace bupoly {

struct PrimePower {
    Poly prime;
    int exp = 1;

    bool operator==(const PrimePower&) const = default;
};

/// Complete prime factorization of `source`, with the factors in canonical
/// order: ascending prime degree, then ascending coefficient mask. The
/// product of prime^exp over the factors equals `source` exactly, and the
/// primes are pairwise distinct irreducibles. factorize(1) has no factors.
struct Factorization {
    std::vector<PrimePower> factors;
    Poly source;

    bool operator==(const Factorization&) const = default;
};

/// Deterministic irreducibility test over F2: p of degree n is irreducible
/// iff x^(2^n) == x (mod p) and gcd(x^(2^(n/q)) - x mod p, p) = 1 for every
/// prime q dividing n. Throws std::domain_error on constants.
bool is_irreducible(const Poly& p);

/// Factor p completely: squarefree decomposition through the formal
/// derivative (a vanishing derivative means p is a square; take the square
/// root by compressing even-position bits), then distinct-degree splitting,
/// then equal-degree refinement. The equal-degree splitter is derandomized
/// (it sweeps the trace maps of the monomials x^i, which always contain a
/// splitting element over F2), so the output is reproducible run to run.
/// Throws std::domain_error for the zero polynomial.
Factorization factorize(const Poly& p);

/// Build a Factorization from known prime powers: sorts canonically, merges
/// repeated primes, verifies each prime is irreducible and each exponent
/// positive, and computes the expanded source.
Factorization make_factorization(std::vector<PrimePower> factors);

/// Product of prime^exp over the given factors.
Poly expand(const std::vector<PrimePower>& factors);

/// Number of distinct irreducible factors; omega(1) == 0.
int omega(const Poly& p);

/// A polynomial is odd when it is coprime to x(x+1), i.e. nonzero at both
/// points of F2.
bool is_odd_poly(const Poly& p);

/// All irreducible polynomials of the given degree, in ascending mask order.
std::vector<Poly> irreducibles_of_degree(int degree);

/// "x^3*(x+1)^4*(x^2+x+1)": factors in canonical order; the unit is "1".
std::string to_string(const Factorization& f);

enum class PolyStyle { sum, hex, factored };

/// Render in the requested style; `factored` factorizes first (the zero
/// polynomial renders as "0"). Every style is re-parseable by parse_poly.
std::string format_poly(const Poly& p, PolyStyle style);

}  // namespace bupoly
