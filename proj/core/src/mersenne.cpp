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

#include <algorithm>
#include <cctype>
#include <numeric>

namespace bupoly {

std::optional<MersennePrime> is_mersenne_prime(const Poly& p) {
    if (p.degree() < 2) return std::nullopt;  // a, b >= 1 means degree >= 2
    if (!is_irreducible(p)) return std::nullopt;
    Poly m = p + Poly::one();
    int a = 0;
    while (!m.coeff(0)) {
        m = m / Poly::x();
        ++a;
    }
    int b = 0;
    while (m.eval(true) == false) {
        m = m / Poly::x_plus_one();
        ++b;
    }
    if (!m.is_one() || a < 1 || b < 1) return std::nullopt;
    if (std::gcd(a, b) != 1) return std::nullopt;
    return MersennePrime{p, a, b};
}

std::vector<MersennePrime> enumerate_mersenne(int max_degree) {
    if (max_degree < 2) throw std::invalid_argument("enumerate_mersenne: max_degree must be >= 2");
    std::vector<MersennePrime> out;
    for (int deg = 2; deg <= max_degree; ++deg) {
        for (int a = 1; a < deg; ++a) {
            const int b = deg - a;
            if (std::gcd(a, b) != 1) continue;
            Poly p = Poly::one() + pow(Poly::x(), static_cast<unsigned>(a)) *
                                       pow(Poly::x_plus_one(), static_cast<unsigned>(b));
            if (is_irreducible(p)) out.push_back({std::move(p), a, b});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const MersennePrime& l, const MersennePrime& r) { return l.poly < r.poly; });
    return out;
}

namespace {

std::vector<CatalogEntry> build_catalog() {
    const Poly x = Poly::x();
    const Poly u = Poly::x_plus_one();
    const Poly one = Poly::one();

    const Poly m1 = one + x * u;                  // 1 + x + x^2
    const Poly m2 = one + x * square(u);          // 1 + x + x^3
    const Poly m3 = one + square(x) * u;          // 1 + x^2 + x^3
    const Poly m4 = one + x * pow(u, 3);          // 1 + x + x^2 + x^3 + x^4
    const Poly m5 = one + pow(x, 3) * u;          // 1 + x^3 + x^4
    const Poly s1 = one + x * u * m1;             // 1 + x + x^4

    std::vector<CatalogEntry> catalog;
    auto add = [&catalog](std::string name, std::vector<PrimePower> factors) {
        Factorization f = make_factorization(std::move(factors));
        Poly p = f.source;
        catalog.push_back({std::move(name), std::move(f), std::move(p)});
    };

    add("M1", {{m1, 1}});
    add("M2", {{m2, 1}});
    add("M3", {{m3, 1}});
    add("M4", {{m4, 1}});
    add("M5", {{m5, 1}});
    add("S1", {{s1, 1}});
    add("C1", {{x, 3}, {u, 4}, {m1, 1}});
    add("C2", {{x, 3}, {u, 5}, {m1, 2}});
    add("C3", {{x, 4}, {u, 4}, {m1, 2}});
    add("C4", {{x, 6}, {u, 6}, {m1, 2}});
    add("C5", {{x, 4}, {u, 5}, {m1, 3}});
    add("C6", {{x, 7}, {u, 8}, {m5, 1}});
    add("C7", {{x, 7}, {u, 9}, {m5, 2}});
    add("C8", {{x, 8}, {u, 8}, {m4, 1}, {m5, 1}});
    add("C9", {{x, 8}, {u, 9}, {m4, 1}, {m5, 2}});
    add("C10", {{x, 7}, {u, 10}, {m1, 2}, {m5, 1}});
    add("C11", {{x, 7}, {u, 13}, {m2, 2}, {m3, 2}});
    add("C12", {{x, 9}, {u, 9}, {m4, 2}, {m5, 2}});
    add("C13", {{x, 14}, {u, 14}, {m2, 2}, {m3, 2}});
    add("D1", {{x, 4}, {u, 5}, {m1, 4}, {s1, 1}});
    add("D2", {{x, 4}, {u, 5}, {m1, 5}, {s1, 2}});

    // Self-check so a typo in the table above cannot ship silently.
    for (const CatalogEntry& e : catalog) {
        if (e.name[0] == 'M') {
            if (!is_mersenne_prime(e.poly))
                throw std::logic_error("catalog self-check failed: " + e.name +
                                       " is not a Mersenne prime");
        } else if (e.name[0] == 'S') {
            if (!is_irreducible(e.poly))
                throw std::logic_error("catalog self-check failed: " + e.name +
                                       " is not irreducible");
        } else {
            if (!is_bup(e.factorization))
                throw std::logic_error("catalog self-check failed: " + e.name +
                                       " is not bi-unitary perfect");
        }
    }
    // Structural identities among the building blocks.
    if (translate(m2) != m3 || translate(m4) != m5 || translate(m1) != m1 || translate(s1) != s1)
        throw std::logic_error("catalog self-check failed: conjugation identities");
    return catalog;
}

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    }
    return true;
}

}  // namespace

const std::vector<CatalogEntry>& named_constants() {
    static const std::vector<CatalogEntry> catalog = build_catalog();
    return catalog;
}

const CatalogEntry* find_named(std::string_view name) {
    for (const CatalogEntry& e : named_constants()) {
        if (iequals(e.name, name)) return &e;
    }
    return nullptr;
}

const CatalogEntry& named_entry(std::string_view name) {
    const CatalogEntry* e = find_named(name);
    if (e == nullptr) throw std::invalid_argument("unknown catalog name: " + std::string(name));
    return *e;
}

std::string name_of(const Poly& p) {
    for (const CatalogEntry& e : named_constants()) {
        if (e.poly == p) return e.name;
    }
    return {};
}

}  // namespace bupoly
