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

#include <algorithm>
#include <bit>
#include <map>
#include <utility>

namespace bupoly {

namespace {

Poly sqmod(const Poly& a, const Poly& m) { return square(a) % m; }

std::vector<int> prime_divisors(int n) {
    std::vector<int> out;
    for (int q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Square root of a perfect square: in characteristic 2 squaring spreads the
// bits to even positions, so take the bits at even positions.
Poly sqrt_of_square(const Poly& p) {
    const int d = p.degree();
    if (d <= 0) return p;
    std::vector<std::uint64_t> w(static_cast<std::size_t>(d / 2) / 64 + 1, 0);
    for (int i = 0; i <= d; i += 2) {
        if (p.coeff(i)) w[static_cast<std::size_t>(i / 2) / 64] |= std::uint64_t{1} << ((i / 2) % 64);
    }
    return Poly::from_words(w);
}

// Squarefree decomposition: appends (squarefree part, multiplicity) pairs.
// Distinct parts are coprime.
void squarefree_parts(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& parts) {
    if (f.is_one()) return;
    const Poly d = derivative(f);
    if (d.is_zero()) {
        squarefree_parts(sqrt_of_square(f), mult * 2, parts);
        return;
    }
    Poly c = gcd(f, d);
    Poly w = f / c;
    int i = 1;
    while (!w.is_one()) {
        const Poly y = gcd(w, c);
        const Poly z = w / y;
        if (!z.is_one()) parts.emplace_back(z, mult * i);
        ++i;
        w = y;
        c = c / y;
    }
    if (!c.is_one()) squarefree_parts(sqrt_of_square(c), mult * 2, parts);
}

// Equal-degree splitting of a squarefree product of irreducibles, all of
// degree d. Derandomized: the traces Tr(t mod f_j) over the monomial basis
// t = x^i span F2^r, so some monomial separates the factors.
void equal_degree_split(const Poly& f, int d, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const int n = f.degree();
    for (int i = 1; i < n; ++i) {
        Poly t = Poly::monomial(i);
        Poly trace = t;
        for (int j = 1; j < d; ++j) {
            t = sqmod(t, f);
            trace += t;
        }
        if (trace.is_zero()) continue;
        const Poly g = gcd(f, trace);
        if (!g.is_one() && g != f) {
            equal_degree_split(g, d, out);
            equal_degree_split(f / g, d, out);
            return;
        }
    }
    throw std::logic_error("equal_degree_split: no splitting monomial found");
}

// Distinct-degree splitting of a squarefree polynomial.
void distinct_degree_split(Poly f, std::vector<Poly>& out) {
    Poly h = Poly::x() % f;
    int d = 0;
    while (f.degree() > 0) {
        ++d;
        if (2 * d > f.degree()) {
            out.push_back(f);
            return;
        }
        h = sqmod(h, f);
        const Poly g = gcd(f, h + Poly::x());
        if (!g.is_one()) {
            equal_degree_split(g, d, out);
            f = f / g;
            h = h % f;
        }
    }
}

}  // namespace

bool is_irreducible(const Poly& p) {
    if (p.degree() < 1) throw std::domain_error("is_irreducible: constant input");
    const int n = p.degree();
    const Poly x = Poly::x() % p;
    std::vector<int> checkpoints;
    for (int q : prime_divisors(n)) checkpoints.push_back(n / q);
    std::sort(checkpoints.begin(), checkpoints.end());
    Poly h = x;
    std::size_t next = 0;
    for (int k = 1; k <= n; ++k) {
        h = sqmod(h, p);
        if (next < checkpoints.size() && k == checkpoints[next]) {
            ++next;
            if (!gcd(h + x, p).is_one()) return false;
        }
    }
    return h == x;
}

Factorization factorize(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("factorize: zero polynomial");
    std::vector<PrimePower> factors;
    if (!p.is_one()) {
        std::vector<std::pair<Poly, int>> parts;
        squarefree_parts(p, 1, parts);
        for (const auto& [sqfree, mult] : parts) {
            std::vector<Poly> primes;
            distinct_degree_split(sqfree, primes);
            for (Poly& q : primes) factors.push_back({std::move(q), mult});
        }
        std::sort(factors.begin(), factors.end(),
                  [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    }
    return Factorization{std::move(factors), p};
}

Poly expand(const std::vector<PrimePower>& factors) {
    Poly out = Poly::one();
    for (const auto& pp : factors) out *= pow(pp.prime, static_cast<unsigned>(pp.exp));
    return out;
}

Factorization make_factorization(std::vector<PrimePower> factors) {
    for (const auto& pp : factors) {
        if (pp.exp < 1) throw std::invalid_argument("make_factorization: exponent must be >= 1");
        if (!is_irreducible(pp.prime))
            throw std::invalid_argument("make_factorization: " + to_string(pp.prime) +
                                        " is not irreducible");
    }
    std::sort(factors.begin(), factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    std::vector<PrimePower> merged;
    for (auto& pp : factors) {
        if (!merged.empty() && merged.back().prime == pp.prime)
            merged.back().exp += pp.exp;
        else
            merged.push_back(std::move(pp));
    }
    Poly source = expand(merged);
    return Factorization{std::move(merged), std::move(source)};
}

int omega(const Poly& p) { return static_cast<int>(factorize(p).factors.size()); }

bool is_odd_poly(const Poly& p) {
    return !p.is_zero() && p.eval(false) && p.eval(true);
}

std::vector<Poly> irreducibles_of_degree(int degree) {
    if (degree < 1) throw std::domain_error("irreducibles_of_degree: degree must be >= 1");
    std::vector<Poly> out;
    if (degree == 1) {
        out.push_back(Poly::x());
        out.push_back(Poly::x_plus_one());
        return out;
    }
    // Every irreducible of degree >= 2 is odd: nonzero constant term and an
    // odd number of terms. That cuts the candidate masks by four.
    const std::uint64_t top = std::uint64_t{1} << degree;
    if (degree > 62) throw std::domain_error("irreducibles_of_degree: degree too large to enumerate");
    for (std::uint64_t mid = 0; mid < (top >> 1); ++mid) {
        const std::uint64_t mask = top | (mid << 1) | 1u;
        if ((std::popcount(mask) & 1) == 0) continue;
        Poly p = Poly::from_mask(mask);
        if (is_irreducible(p)) out.push_back(std::move(p));
    }
    return out;
}

std::string to_string(const Factorization& f) {
    if (f.factors.empty()) return "1";
    std::string out;
    for (const auto& pp : f.factors) {
        if (!out.empty()) out += '*';
        if (pp.prime == Poly::x())
            out += 'x';
        else {
            out += '(';
            out += to_string(pp.prime);
            out += ')';
        }
        if (pp.exp != 1) {
            out += '^';
            out += std::to_string(pp.exp);
        }
    }
    return out;
}

std::string format_poly(const Poly& p, PolyStyle style) {
    switch (style) {
        case PolyStyle::sum:
            return to_string(p);
        case PolyStyle::hex:
            return to_hex(p);
        case PolyStyle::factored:
            return p.is_zero() ? "0" : to_string(factorize(p));
    }
    throw std::logic_error("format_poly: unknown style");
}

}  // namespace bupoly
