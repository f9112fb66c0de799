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

#include "bupoly/factor.hpp"

#include <cstdint>

namespace bupoly {

/// Default ceiling on how many divisors enumerate_divisors will materialize.
inline constexpr std::uint64_t kDefaultDivisorCap = std::uint64_t{1} << 20;

/// Raised when a divisor enumeration would exceed the configured cap.
/// Exceeding the cap is an error, never a silent truncation.
class divisor_cap_error : public std::runtime_error {
public:
    divisor_cap_error(std::uint64_t count, std::uint64_t cap);
    std::uint64_t count() const { return count_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t count_;
    std::uint64_t cap_;
};

/// sigma of a prime power: 1 + T + ... + T^exp (exp >= 0).
Poly sigma_prime_power(const Poly& prime, int exp);
inline Poly sigma_prime_power(const PrimePower& pp) { return sigma_prime_power(pp.prime, pp.exp); }

/// Bi-unitary divisor sum of a prime power, by the closed forms
///   sigma**(T^(2n))   = (1+T) * sigma(T^n) * sigma(T^(n-1))
///   sigma**(T^(2n+1)) = sigma(T^(2n+1)).
Poly sigma_bistar_prime_power(const Poly& prime, int exp);

/// Sum of all divisors. Multiplicative; sigma(1) == 1.
Poly sigma(const Factorization& f);
Poly sigma(const Poly& s);

/// Sum of unitary divisors (divisors D with gcd(D, S/D) = 1):
/// the product of (1 + prime^exp).
Poly sigma_star(const Factorization& f);
Poly sigma_star(const Poly& s);

/// Sum of bi-unitary divisors (divisors D with gcd_u(D, S/D) = 1), computed
/// multiplicatively from the per-prime-power closed forms, never by divisor
/// enumeration (that is what sigma_bistar_oracle is for).
Poly sigma_bistar(const Factorization& f);
Poly sigma_bistar(const Poly& s);

/// Greatest common unitary divisor: the product over common primes p of
/// p^v_p(s) exactly when v_p(s) == v_p(t). Zero inputs are errors.
Poly gcd_unitary(const Poly& s, const Poly& t);

enum class DivisorKind { all, unitary, biunitary };

/// All divisors of the requested kind in ascending (degree, mask) order.
/// Throws divisor_cap_error if the total divisor count exceeds `cap`.
std::vector<Poly> enumerate_divisors(const Factorization& f, DivisorKind kind,
                                     std::uint64_t cap = kDefaultDivisorCap);
std::vector<Poly> enumerate_divisors(const Poly& s, DivisorKind kind,
                                     std::uint64_t cap = kDefaultDivisorCap);

/// Brute-force reference for sigma_bistar: the XOR-sum of the enumerated
/// bi-unitary divisors. Exponential in the exponents; testing only.
Poly sigma_bistar_oracle(const Factorization& f, std::uint64_t cap = kDefaultDivisorCap);
Poly sigma_bistar_oracle(const Poly& s, std::uint64_t cap = kDefaultDivisorCap);

/// Bi-unitary perfect: sigma**(s) == s. The constant 1 counts as (trivially)
/// bi-unitary perfect; searches never report it.
bool is_bup(const Factorization& f);
bool is_bup(const Poly& s);

/// sigma(s) == s.
bool is_perfect(const Poly& s);

/// sigma*(s) == s.
bool is_unitary_perfect(const Poly& s);

}  // namespace bupoly
