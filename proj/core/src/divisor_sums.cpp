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

#include "bupoly/divisor_sums.hpp"

#include <algorithm>

namespace bupoly {

divisor_cap_error::divisor_cap_error(std::uint64_t count, std::uint64_t cap)
    : std::runtime_error("divisor enumeration needs " + std::to_string(count) +
                         " divisors, above the cap of " + std::to_string(cap)),
      count_(count),
      cap_(cap) {}

Poly sigma_prime_power(const Poly& prime, int exp) {
    if (exp < 0) throw std::domain_error("sigma_prime_power: negative exponent");
    // Horner: 1 + T(1 + T(1 + ...)).
    Poly out = Poly::one();
    for (int i = 0; i < exp; ++i) out = out * prime + Poly::one();
    return out;
}

Poly sigma_bistar_prime_power(const Poly& prime, int exp) {
    if (exp < 0) throw std::domain_error("sigma_bistar_prime_power: negative exponent");
    if (exp % 2 == 1) return sigma_prime_power(prime, exp);
    if (exp == 0) return Poly::one();
    const int n = exp / 2;
    return (Poly::one() + prime) * sigma_prime_power(prime, n) * sigma_prime_power(prime, n - 1);
}

namespace {

template <typename PerPrimePower>
Poly multiplicative(const Factorization& f, PerPrimePower&& per) {
    Poly out = Poly::one();
    for (const auto& pp : f.factors) out *= per(pp);
    return out;
}

}  // namespace

Poly sigma(const Factorization& f) {
    return multiplicative(f, [](const PrimePower& pp) { return sigma_prime_power(pp); });
}

Poly sigma(const Poly& s) { return sigma(factorize(s)); }

Poly sigma_star(const Factorization& f) {
    return multiplicative(f, [](const PrimePower& pp) {
        return Poly::one() + pow(pp.prime, static_cast<unsigned>(pp.exp));
    });
}

Poly sigma_star(const Poly& s) { return sigma_star(factorize(s)); }

Poly sigma_bistar(const Factorization& f) {
    return multiplicative(
        f, [](const PrimePower& pp) { return sigma_bistar_prime_power(pp.prime, pp.exp); });
}

Poly sigma_bistar(const Poly& s) { return sigma_bistar(factorize(s)); }

Poly gcd_unitary(const Poly& s, const Poly& t) {
    const Factorization fs = factorize(s);
    const Factorization ft = factorize(t);
    Poly out = Poly::one();
    std::size_t i = 0, j = 0;
    while (i < fs.factors.size() && j < ft.factors.size()) {
        const auto& a = fs.factors[i];
        const auto& b = ft.factors[j];
        if (a.prime == b.prime) {
            if (a.exp == b.exp) out *= pow(a.prime, static_cast<unsigned>(a.exp));
            ++i;
            ++j;
        } else if (a.prime < b.prime) {
            ++i;
        } else {
            ++j;
        }
    }
    return out;
}

std::vector<Poly> enumerate_divisors(const Factorization& f, DivisorKind kind, std::uint64_t cap) {
    std::uint64_t count = 1;
    for (const auto& pp : f.factors) {
        count *= static_cast<std::uint64_t>(pp.exp) + 1;
        if (count > cap) throw divisor_cap_error(count, cap);
    }

    // Per-factor power tables.
    std::vector<std::vector<Poly>> powers;
    powers.reserve(f.factors.size());
    for (const auto& pp : f.factors) {
        std::vector<Poly> row;
        row.reserve(static_cast<std::size_t>(pp.exp) + 1);
        row.push_back(Poly::one());
        for (int e = 1; e <= pp.exp; ++e) row.push_back(row.back() * pp.prime);
        powers.push_back(std::move(row));
    }

    const std::size_t k = f.factors.size();
    std::vector<int> exps(k, 0);
    std::vector<Poly> out;
    out.reserve(count);
    for (;;) {
        bool keep = true;
        for (std::size_t i = 0; i < k && keep; ++i) {
            const int e = f.factors[i].exp;
            const int v = exps[i];
            switch (kind) {
                case DivisorKind::all:
                    break;
                case DivisorKind::unitary:
                    keep = (v == 0 || v == e);
                    break;
                case DivisorKind::biunitary:
                    // gcd_u(T^v, T^(e-v)) != 1 exactly when v == e - v >= 1.
                    keep = !(v >= 1 && 2 * v == e);
                    break;
            }
        }
        if (keep) {
            Poly d = Poly::one();
            for (std::size_t i = 0; i < k; ++i) d *= powers[i][static_cast<std::size_t>(exps[i])];
            out.push_back(std::move(d));
        }
        std::size_t i = 0;
        while (i < k && exps[i] == f.factors[i].exp) exps[i++] = 0;
        if (i == k) break;
        ++exps[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Poly> enumerate_divisors(const Poly& s, DivisorKind kind, std::uint64_t cap) {
    return enumerate_divisors(factorize(s), kind, cap);
}

Poly sigma_bistar_oracle(const Factorization& f, std::uint64_t cap) {
    Poly sum;
    for (const Poly& d : enumerate_divisors(f, DivisorKind::biunitary, cap)) sum += d;
    return sum;
}

Poly sigma_bistar_oracle(const Poly& s, std::uint64_t cap) {
    return sigma_bistar_oracle(factorize(s), cap);
}

bool is_bup(const Factorization& f) { return sigma_bistar(f) == f.source; }

bool is_bup(const Poly& s) { return sigma_bistar(s) == s; }

bool is_perfect(const Poly& s) { return sigma(s) == s; }

bool is_unitary_perfect(const Poly& s) { return sigma_star(s) == s; }

}  // namespace bupoly
