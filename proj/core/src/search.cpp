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

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace bupoly {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int resolve_threads(const SearchOptions& opts) {
    if (opts.threads > 0) return opts.threads;
    if (const char* env = std::getenv("BUPOLY_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Run fn(0..n_units-1) on up to `threads` workers. Results must be written
// into per-unit slots so the merged output is independent of scheduling.
void parallel_units(std::size_t n_units, int threads,
                    const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || n_units <= 1) {
        for (std::size_t i = 0; i < n_units; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n_units) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t n_workers = std::min<std::size_t>(static_cast<std::size_t>(threads), n_units);
    pool.reserve(n_workers);
    for (std::size_t t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

struct PowCache {
    std::vector<Poly> powers;  // powers[e] = base^e
    std::vector<Poly> sig2;    // sig2[e] = sigma**(base^e)
};

PowCache build_cache(const Poly& base, int max_exp) {
    PowCache cache;
    cache.powers.reserve(static_cast<std::size_t>(max_exp) + 1);
    cache.sig2.reserve(static_cast<std::size_t>(max_exp) + 1);
    cache.powers.push_back(Poly::one());
    cache.sig2.push_back(Poly::one());
    for (int e = 1; e <= max_exp; ++e) {
        cache.powers.push_back(cache.powers.back() * base);
        cache.sig2.push_back(sigma_bistar_prime_power(base, e));
    }
    return cache;
}

Factorization conjugate(const Factorization& f) {
    std::vector<PrimePower> factors;
    factors.reserve(f.factors.size());
    for (const auto& pp : f.factors) factors.push_back({translate(pp.prime), pp.exp});
    return make_factorization(std::move(factors));
}

std::vector<BupRecord> catalog_records(std::initializer_list<std::string_view> names) {
    std::vector<BupRecord> out;
    out.reserve(names.size());
    for (std::string_view n : names) out.push_back(make_bup_record(named_entry(n).factorization));
    return out;
}

std::vector<Poly> hit_polys(const std::vector<BupRecord>& records) {
    std::vector<Poly> out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back(r.poly);
    return out;
}

// Turn deduplicated hit factorizations into sorted, verified records and
// settle the verdict against the expected set.
void finish_report(SearchReport& report, std::map<Poly, Factorization> hits,
                   const std::vector<BupRecord>& expected, const SearchOptions& opts) {
    report.hits.clear();
    report.hits.reserve(hits.size());
    for (auto& [poly, fact] : hits) {
        BupRecord record = make_bup_record(std::move(fact));
        // Belt: hits must agree with the divisor-enumeration oracle whenever
        // the divisor count is under the cap.
        std::uint64_t count = 1;
        bool under_cap = true;
        for (const auto& pp : record.factorization.factors) {
            count *= static_cast<std::uint64_t>(pp.exp) + 1;
            if (count > opts.divisor_cap) {
                under_cap = false;
                break;
            }
        }
        if (under_cap && sigma_bistar_oracle(record.factorization, opts.divisor_cap) != record.poly)
            throw std::logic_error("search hit fails the divisor-enumeration oracle");
        report.hits.push_back(std::move(record));
    }
    report.pass = hit_polys(report.hits) == hit_polys(expected);
}

// Exhaustive scan of x^a (x+1)^b P^c [Q^d] over explicit exponent sets.
SearchReport run_bounded(std::string case_id, std::vector<std::pair<Poly, Poly>> pool,
                         std::vector<ExponentSets> regions,
                         const std::vector<BupRecord>& expected, const SearchOptions& opts) {
    const auto start = Clock::now();
    SearchReport report;
    report.space.case_id = std::move(case_id);
    report.space.prime_pool = std::move(pool);
    report.space.regions = std::move(regions);

    int max_ab = 0;
    int max_cd = 0;
    for (const auto& rg : report.space.regions) {
        for (int v : rg.a) max_ab = std::max(max_ab, v);
        for (int v : rg.b) max_ab = std::max(max_ab, v);
        for (int v : rg.c) max_cd = std::max(max_cd, v);
        for (int v : rg.d) max_cd = std::max(max_cd, v);
    }
    const PowCache cx = build_cache(Poly::x(), max_ab);
    const PowCache cu = build_cache(Poly::x_plus_one(), max_ab);
    std::map<Poly, PowCache> prime_caches;
    for (const auto& [p, q] : report.space.prime_pool) {
        if (!prime_caches.contains(p)) prime_caches.emplace(p, build_cache(p, max_cd));
        if (!q.is_zero() && !prime_caches.contains(q)) prime_caches.emplace(q, build_cache(q, max_cd));
    }

    struct Unit {
        std::size_t pool_i, region_i;
    };
    std::vector<Unit> units;
    for (std::size_t pi = 0; pi < report.space.prime_pool.size(); ++pi)
        for (std::size_t ri = 0; ri < report.space.regions.size(); ++ri) units.push_back({pi, ri});

    std::vector<std::vector<Factorization>> unit_hits(units.size());
    std::vector<std::uint64_t> unit_counts(units.size(), 0);

    parallel_units(units.size(), resolve_threads(opts), [&](std::size_t ui) {
        const auto& [pi, ri] = units[ui];
        const auto& [P, Q] = report.space.prime_pool[pi];
        const ExponentSets& rg = report.space.regions[ri];
        const PowCache& cp = prime_caches.at(P);
        const PowCache* cq = Q.is_zero() ? nullptr : &prime_caches.at(Q);
        const Poly x = Poly::x();
        const Poly u = Poly::x_plus_one();
        std::uint64_t count = 0;
        for (int a : rg.a) {
            for (int b : rg.b) {
                const Poly lhs_ab = cx.sig2[a] * cu.sig2[b];
                const Poly rhs_ab = cx.powers[a] * cu.powers[b];
                for (int c : rg.c) {
                    const Poly lhs_abc = lhs_ab * cp.sig2[c];
                    const Poly rhs_abc = rhs_ab * cp.powers[c];
                    if (cq == nullptr) {
                        ++count;
                        if (lhs_abc == rhs_abc)
                            unit_hits[ui].push_back(
                                make_factorization({{x, a}, {u, b}, {P, c}}));
                    } else {
                        for (int d : rg.d) {
                            ++count;
                            if (lhs_abc * cq->sig2[d] == rhs_abc * cq->powers[d])
                                unit_hits[ui].push_back(
                                    make_factorization({{x, a}, {u, b}, {P, c}, {Q, d}}));
                        }
                    }
                }
            }
        }
        unit_counts[ui] = count;
    });

    std::map<Poly, Factorization> hits;
    for (std::size_t ui = 0; ui < units.size(); ++ui) {
        report.candidate_count += unit_counts[ui];
        for (auto& f : unit_hits[ui]) hits.emplace(f.source, std::move(f));
    }
    finish_report(report, std::move(hits), expected, opts);
    report.elapsed_ms = ms_since(start);
    return report;
}

// Exponent vocabularies from the bounding lemmas.
std::vector<int> odd_exponents(std::initializer_list<int> vs, int max_beta) {
    std::vector<int> out;
    for (int beta = 1; beta <= max_beta; ++beta)
        for (int v : vs) out.push_back((1 << beta) * v - 1);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ExponentSets> parity_regions(std::vector<int> even, std::vector<int> odd,
                                         std::vector<int> c, std::vector<int> d) {
    return {
        {even, even, c, d},
        {even, odd, c, d},
        {odd, even, c, d},
        {odd, odd, c, d},
    };
}

}  // namespace

BupRecord make_bup_record(Factorization f) {
    if (!is_bup(f))
        throw std::invalid_argument("make_bup_record: " + to_string(f) +
                                    " is not bi-unitary perfect");
    BupRecord r;
    r.poly = f.source;
    r.degree = f.source.degree();
    r.omega = static_cast<int>(f.factors.size());
    r.label = name_of(r.poly);
    r.conjugate_label = name_of(translate(r.poly));
    r.factorization = std::move(f);
    return r;
}

std::vector<BupRecord> conjugate_closure(const std::vector<BupRecord>& records) {
    std::map<Poly, BupRecord> acc;
    for (const BupRecord& r : records) {
        BupRecord conj = make_bup_record(conjugate(r.factorization));
        acc.emplace(r.poly, r);
        acc.emplace(conj.poly, std::move(conj));
    }
    std::vector<BupRecord> out;
    out.reserve(acc.size());
    for (auto& [poly, r] : acc) out.push_back(std::move(r));
    return out;
}

std::vector<BupRecord> expected_omega3() {
    return conjugate_closure(catalog_records({"C1", "C2", "C3", "C4", "C5", "C6", "C7"}));
}

std::vector<BupRecord> expected_omega4_mersenne() {
    return conjugate_closure(catalog_records({"C8", "C9", "C10", "C11", "C12", "C13"}));
}

std::vector<BupRecord> expected_omega4_nonmersenne() {
    return conjugate_closure(catalog_records({"D1", "D2"}));
}

bool is_two_prime_family_exponent(int a) {
    return a == 2 || (a >= 1 && std::has_single_bit(static_cast<unsigned>(a) + 1));
}

std::vector<BupRecord> expected_blind(int max_degree, int max_omega) {
    std::map<Poly, BupRecord> acc;
    for (int a = 1; 2 * a <= max_degree; ++a) {
        if (!is_two_prime_family_exponent(a)) continue;
        BupRecord r = make_bup_record(
            make_factorization({{Poly::x(), a}, {Poly::x_plus_one(), a}}));
        acc.emplace(r.poly, std::move(r));
    }
    if (max_omega >= 3) {
        std::vector<BupRecord> catalog;
        for (const CatalogEntry& e : named_constants()) {
            if (e.name[0] != 'C' && e.name[0] != 'D') continue;
            catalog.push_back(make_bup_record(e.factorization));
        }
        for (BupRecord& r : conjugate_closure(catalog)) {
            if (r.degree <= max_degree && r.omega <= max_omega) acc.emplace(r.poly, std::move(r));
        }
    }
    std::vector<BupRecord> out;
    out.reserve(acc.size());
    for (auto& [poly, r] : acc) out.push_back(std::move(r));
    return out;
}

SearchReport search_omega3(const SearchOptions& opts) {
    const Poly m1 = named_entry("M1").poly;
    const Poly m4 = named_entry("M4").poly;
    const Poly m5 = named_entry("M5").poly;
    const std::vector<int> even = {4, 6, 8, 10};
    const std::vector<int> odd = odd_exponents({1, 3, 5}, 3);
    const std::vector<int> c = {1, 2, 3, 7};
    std::vector<std::pair<Poly, Poly>> pool;
    for (const Poly& p : {m1, m4, m5}) pool.emplace_back(p, Poly::zero());
    return run_bounded("omega3", std::move(pool), parity_regions(even, odd, c, {}),
                       expected_omega3(), opts);
}

SearchReport search_omega4_mersenne(const SearchOptions& opts) {
    std::vector<Poly> mersennes;
    for (const char* n : {"M1", "M2", "M3", "M4", "M5"}) mersennes.push_back(named_entry(n).poly);
    std::vector<std::pair<Poly, Poly>> pool;
    for (std::size_t i = 0; i < mersennes.size(); ++i)
        for (std::size_t j = i + 1; j < mersennes.size(); ++j)
            pool.emplace_back(mersennes[i], mersennes[j]);
    const std::vector<int> even = {4, 6, 8, 10, 12, 14};
    const std::vector<int> odd = odd_exponents({1, 3, 5, 7}, 3);
    const std::vector<int> cd = {1, 2, 3, 7};
    return run_bounded("omega4-mersenne", std::move(pool), parity_regions(even, odd, cd, cd),
                       expected_omega4_mersenne(), opts);
}

SearchReport search_omega4_nonmersenne(const SearchOptions& opts) {
    const auto start = Clock::now();
    const Poly x = Poly::x();
    const Poly u = Poly::x_plus_one();
    const Poly one = Poly::one();
    const Poly m1 = named_entry("M1").poly;
    const Poly m4 = named_entry("M4").poly;
    const Poly s1 = named_entry("S1").poly;

    // Sub-case: P*Q = sigma(x^2m). Fixed pair P = M1, Q = 1 + x^3(x^3+1).
    const Poly q_pq = one + pow(x, 3) * u * m1;  // 1 + x^3 + x^6
    // Sub-case: Q = sigma(x^2m). Two fixed pairs.
    const Poly q_sx_a = one + x * pow(u, 3) * pow(m1, 4);  // sigma(x^12)
    const Poly q_sx_b = one + x * u * square(m4);          // sigma(x^10)
    // Sub-case: Q = sigma(P^2m). P = M1, Q in {sigma(M1^2), sigma(M1^4)}.
    const Poly q_sp_b = one + pow(x, 3) * pow(u, 3) * m1;  // sigma(M1^4)

    const std::vector<BupRecord> none;
    SearchReport sub1 =
        run_bounded("pq-sigma-x2m", {{m1, q_pq}},
                    {{{1, 3, 4, 6, 7, 16}, {1, 3, 4, 6, 7, 16}, {1, 2, 3}, {1}}}, none, opts);
    SearchReport sub2 = run_bounded(
        "q-sigma-x2m", {{m1, q_sx_a}, {m4, q_sx_b}},
        {{{4, 6, 8, 10, 20, 22, 24, 26}, {4, 6, 8, 10, 20, 22, 24, 26}, {1, 2, 3, 7}, {1}}}, none,
        opts);
    const std::vector<int> ab_even = {2, 4, 6, 8, 10};
    const std::vector<int> ab_odd = {1, 3, 5, 7, 9, 11};
    const std::vector<int> c = {1, 2, 3, 4, 5, 6, 7, 8};
    const std::vector<int> d = {1, 2, 3};
    SearchReport sub3 = run_bounded("q-sigma-p2m", {{m1, s1}, {m1, q_sp_b}},
                                    {{ab_even, ab_odd, c, d}, {ab_odd, ab_even, c, d}},
                                    expected_omega4_nonmersenne(), opts);

    SearchReport report;
    report.space.case_id = "omega4-nonmersenne";
    std::map<Poly, Factorization> hits;
    for (SearchReport* sub : {&sub1, &sub2, &sub3}) {
        report.candidate_count += sub->candidate_count;
        for (const BupRecord& r : sub->hits) hits.emplace(r.poly, r.factorization);
    }
    finish_report(report, std::move(hits), expected_omega4_nonmersenne(), opts);
    report.pass = report.pass && sub1.pass && sub2.pass && sub3.pass;
    report.subcases.push_back(std::move(sub1));
    report.subcases.push_back(std::move(sub2));
    report.subcases.push_back(std::move(sub3));
    report.elapsed_ms = ms_since(start);
    return report;
}

namespace {

struct PrimePowerEntry {
    Poly poly;  // prime^exp
    Poly sig2;  // sigma**(prime^exp)
    int degree = 0;
    int exp = 0;
    std::size_t prime_id = 0;
};

// All odd irreducibles of degree <= max_degree, ascending (degree, mask),
// enumerated in parallel chunks. Odd irreducibles are exactly the
// irreducibles of degree >= 2.
std::vector<Poly> odd_irreducible_table(int max_degree, int threads) {
    struct Chunk {
        int degree;
        std::uint64_t from, to;  // range of the free middle bits
    };
    constexpr std::uint64_t kChunk = 1u << 14;
    std::vector<Chunk> chunks;
    for (int d = 2; d <= max_degree; ++d) {
        const std::uint64_t mids = std::uint64_t{1} << (d - 1);
        for (std::uint64_t from = 0; from < mids; from += kChunk)
            chunks.push_back({d, from, std::min(mids, from + kChunk)});
    }
    std::vector<std::vector<Poly>> found(chunks.size());
    parallel_units(chunks.size(), threads, [&](std::size_t ci) {
        const auto [d, from, to] = chunks[ci];
        const std::uint64_t top = std::uint64_t{1} << d;
        for (std::uint64_t mid = from; mid < to; ++mid) {
            const std::uint64_t mask = top | (mid << 1) | 1u;
            if ((std::popcount(mask) & 1) == 0) continue;  // p(1) must be 1
            Poly p = Poly::from_mask(mask);
            if (is_irreducible(p)) found[ci].push_back(std::move(p));
        }
    });
    std::vector<Poly> out;
    for (auto& chunk : found)
        for (auto& p : chunk) out.push_back(std::move(p));
    return out;  // chunk order is already (degree, mask) ascending
}

}  // namespace

SearchReport blind_search(int max_degree, int max_omega, const SearchOptions& opts) {
    if (max_degree < 2) throw std::invalid_argument("blind_search: max_degree must be >= 2");
    if (max_degree > opts.blind_ceiling)
        throw std::invalid_argument("blind_search: max_degree " + std::to_string(max_degree) +
                                    " exceeds the ceiling of " + std::to_string(opts.blind_ceiling));
    if (max_omega < 2 || max_omega > 4)
        throw std::invalid_argument("blind_search: max_omega must be between 2 and 4");

    const auto start = Clock::now();
    const int threads = resolve_threads(opts);
    SearchReport report;
    report.space.case_id = "blind";
    report.space.max_degree = max_degree;
    report.space.max_omega = max_omega;

    const int odd_budget = max_degree - 2;

    // Prime powers of odd irreducibles, with their bi-unitary divisor sums,
    // ascending (degree, mask of the power).
    std::vector<Poly> primes;
    if (max_omega >= 3 && odd_budget >= 2) primes = odd_irreducible_table(odd_budget, threads);
    std::vector<PrimePowerEntry> entries;
    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
        const int pd = primes[pi].degree();
        Poly power = primes[pi];
        for (int e = 1; e * pd <= odd_budget; ++e) {
            if (e > 1) power *= primes[pi];
            entries.push_back({power, sigma_bistar_prime_power(primes[pi], e), e * pd, e, pi});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const PrimePowerEntry& l, const PrimePowerEntry& r) {
        return l.poly < r.poly;
    });

    const PowCache cx = build_cache(Poly::x(), max_degree - 1);
    const PowCache cu = build_cache(Poly::x_plus_one(), max_degree - 1);

    struct OddPart {
        std::size_t first = 0, second = 0;  // indices into `entries`; omega-2 hits use none
        int n = 0;
    };
    struct UnitHit {
        int a, b;
        OddPart odd;
    };
    std::vector<std::pair<int, int>> units;
    for (int a = 1; a < max_degree; ++a)
        for (int b = 1; a + b <= max_degree; ++b) units.emplace_back(a, b);

    std::vector<std::vector<UnitHit>> unit_hits(units.size());
    std::vector<std::uint64_t> unit_counts(units.size(), 0);

    parallel_units(units.size(), threads, [&](std::size_t ui) {
        const auto [a, b] = units[ui];
        const int rem = max_degree - a - b;
        const Poly lhs = cx.sig2[a] * cu.sig2[b];
        const Poly rhs = cx.powers[a] * cu.powers[b];
        std::uint64_t count = 1;
        if (lhs == rhs) unit_hits[ui].push_back({a, b, {0, 0, 0}});
        if (max_omega >= 3) {
            for (std::size_t i = 0; i < entries.size() && entries[i].degree <= rem; ++i) {
                ++count;
                if (lhs * entries[i].sig2 == rhs * entries[i].poly)
                    unit_hits[ui].push_back({a, b, {i, 0, 1}});
                if (max_omega >= 4 && 2 * entries[i].degree <= rem) {
                    const int budget = rem - entries[i].degree;
                    const Poly lhs_i = lhs * entries[i].sig2;
                    const Poly rhs_i = rhs * entries[i].poly;
                    for (std::size_t j = i + 1; j < entries.size() && entries[j].degree <= budget;
                         ++j) {
                        if (entries[j].prime_id == entries[i].prime_id) continue;
                        ++count;
                        if (lhs_i * entries[j].sig2 == rhs_i * entries[j].poly)
                            unit_hits[ui].push_back({a, b, {i, j, 2}});
                    }
                }
            }
        }
        unit_counts[ui] = count;
    });

    std::map<Poly, Factorization> hits;
    for (std::size_t ui = 0; ui < units.size(); ++ui) {
        report.candidate_count += unit_counts[ui];
        for (const UnitHit& h : unit_hits[ui]) {
            std::vector<PrimePower> factors = {{Poly::x(), h.a}, {Poly::x_plus_one(), h.b}};
            if (h.odd.n >= 1) {
                const auto& e = entries[h.odd.first];
                factors.push_back({primes[e.prime_id], e.exp});
            }
            if (h.odd.n == 2) {
                const auto& e = entries[h.odd.second];
                factors.push_back({primes[e.prime_id], e.exp});
            }
            Factorization f = make_factorization(std::move(factors));
            hits.emplace(f.source, std::move(f));
        }
    }
    finish_report(report, std::move(hits), expected_blind(max_degree, max_omega), opts);
    report.elapsed_ms = ms_since(start);
    return report;
}

bool is_ibup(const BupRecord& record) {
    if (!is_bup(record.factorization))
        throw std::invalid_argument("is_ibup: record is not bi-unitary perfect");
    const auto& fs = record.factorization.factors;
    const unsigned k = static_cast<unsigned>(fs.size());
    if (k < 2) return true;
    const unsigned full = (1u << k) - 1;
    // Coprime splits of the polynomial are exactly the subsets of its prime
    // set; test each unordered proper split once.
    for (unsigned m = 1; m < full; ++m) {
        const unsigned complement = full & ~m;
        if (m > complement) continue;
        std::vector<PrimePower> part1, part2;
        for (unsigned i = 0; i < k; ++i) ((m >> i) & 1u ? part1 : part2).push_back(fs[i]);
        if (is_bup(make_factorization(part1)) && is_bup(make_factorization(part2))) return false;
    }
    return true;
}

VerifyReport verify_theorems(const SearchOptions& opts) {
    const auto start = Clock::now();
    VerifyReport report;
    report.catalog_pass = true;
    for (const CatalogEntry& e : named_constants()) {
        if (e.name[0] != 'C' && e.name[0] != 'D') continue;
        if (!is_bup(e.factorization) || !is_bup(conjugate(e.factorization)))
            report.catalog_pass = false;
    }
    report.reports.push_back(search_omega3(opts));
    report.reports.push_back(search_omega4_mersenne(opts));
    report.reports.push_back(search_omega4_nonmersenne(opts));
    report.reports.push_back(blind_search(24, 4, opts));

    // Independent-route consistency: within degree 24 and omega <= 4, the
    // blind hits must be exactly the bounded hits plus the two-prime family,
    // with no extras and no misses.
    std::set<Poly> bounded_union;
    for (int a = 1; 2 * a <= 24; ++a) {
        if (is_two_prime_family_exponent(a))
            bounded_union.insert(pow(Poly::x(), static_cast<unsigned>(a)) *
                                 pow(Poly::x_plus_one(), static_cast<unsigned>(a)));
    }
    for (std::size_t i = 0; i < 3; ++i) {
        for (const BupRecord& r : report.reports[i].hits) {
            if (r.degree <= 24) bounded_union.insert(r.poly);
        }
    }
    std::set<Poly> blind_hits;
    for (const BupRecord& r : report.reports[3].hits) blind_hits.insert(r.poly);
    report.consistency_pass = bounded_union == blind_hits;

    report.pass = report.catalog_pass && report.consistency_pass;
    for (const SearchReport& r : report.reports) report.pass = report.pass && r.pass;
    report.elapsed_ms = ms_since(start);
    return report;
}

nlohmann::json to_json(const BupRecord& record) {
    return nlohmann::json{{"poly_hex", to_hex(record.poly)},
                          {"factored", to_string(record.factorization)},
                          {"degree", record.degree},
                          {"omega", record.omega},
                          {"label", record.label},
                          {"conjugate_label", record.conjugate_label}};
}

nlohmann::json to_json(const SearchReport& report) {
    nlohmann::json space;
    space["case_id"] = report.space.case_id;
    if (report.space.max_degree >= 0) space["max_degree"] = report.space.max_degree;
    if (report.space.max_omega >= 0) space["max_omega"] = report.space.max_omega;
    if (!report.space.prime_pool.empty()) {
        nlohmann::json pool = nlohmann::json::array();
        for (const auto& [p, q] : report.space.prime_pool) {
            if (q.is_zero())
                pool.push_back({to_string(p)});
            else
                pool.push_back({to_string(p), to_string(q)});
        }
        space["prime_pool"] = std::move(pool);
    }
    if (!report.space.regions.empty()) {
        nlohmann::json regions = nlohmann::json::array();
        for (const auto& rg : report.space.regions) {
            nlohmann::json r{{"a", rg.a}, {"b", rg.b}, {"c", rg.c}};
            if (!rg.d.empty()) r["d"] = rg.d;
            regions.push_back(std::move(r));
        }
        space["regions"] = std::move(regions);
    }

    nlohmann::json hits = nlohmann::json::array();
    for (const BupRecord& r : report.hits) hits.push_back(to_json(r));
    nlohmann::json j{{"case_id", report.space.case_id},
                     {"candidate_count", report.candidate_count},
                     {"elapsed_ms", report.elapsed_ms},
                     {"hits", std::move(hits)},
                     {"verdict", report.verdict()},
                     {"space", std::move(space)}};
    if (!report.subcases.empty()) {
        nlohmann::json subs = nlohmann::json::array();
        for (const SearchReport& s : report.subcases) subs.push_back(to_json(s));
        j["subcases"] = std::move(subs);
    }
    return j;
}

nlohmann::json to_json(const VerifyReport& report) {
    nlohmann::json reports = nlohmann::json::array();
    for (const SearchReport& r : report.reports) reports.push_back(to_json(r));
    return nlohmann::json{{"catalog", report.catalog_pass ? "pass" : "fail"},
                          {"bounded_vs_blind", report.consistency_pass ? "pass" : "fail"},
                          {"reports", std::move(reports)},
                          {"elapsed_ms", report.elapsed_ms},
                          {"verdict", report.verdict()}};
}

}  // namespace bupoly
