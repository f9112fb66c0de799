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

#include "bupoly/mersenne.hpp"

#include <nlohmann/json_fwd.hpp>

#include <utility>

namespace bupoly {

struct SearchOptions {
    /// Worker threads; 0 means the BUPOLY_THREADS environment variable, or
    /// the hardware concurrency when that is unset.
    int threads = 0;

    /// Cap used when re-verifying hits against the divisor-enumeration
    /// oracle; hits whose divisor count exceeds it are only checked against
    /// the closed form.
    std::uint64_t divisor_cap = kDefaultDivisorCap;

    /// Hard ceiling for blind_search's max_degree.
    int blind_ceiling = 24;
};

/// A verified bi-unitary perfect polynomial.
struct BupRecord {
    Poly poly;
    Factorization factorization;
    int omega = 0;
    int degree = 0;
    std::string label;            // catalog name when the polynomial is named
    std::string conjugate_label;  // catalog name of its translate, when named
};

/// Build a record from a factorization, filling the derived fields and the
/// catalog labels. Throws std::invalid_argument if it is not bi-unitary
/// perfect.
BupRecord make_bup_record(Factorization f);

/// Candidate exponent lists for one parity region of a bounded search.
/// `d` is empty for three-factor searches.
struct ExponentSets {
    std::vector<int> a, b, c, d;
};

/// Description of a searched candidate space.
struct SearchSpace {
    std::string case_id;
    /// (P, Q) choices of odd irreducibles; Q is the zero polynomial for
    /// three-factor spaces.
    std::vector<std::pair<Poly, Poly>> prime_pool;
    std::vector<ExponentSets> regions;
    int max_degree = -1;  // blind search only
    int max_omega = -1;   // blind search only
};

struct SearchReport {
    SearchSpace space;
    std::vector<BupRecord> hits;  // deduplicated, ascending (degree, mask)
    std::uint64_t candidate_count = 0;
    double elapsed_ms = 0.0;
    bool pass = false;  // hits == the expected set for this space
    std::vector<SearchReport> subcases;

    std::string verdict() const { return pass ? "pass" : "fail"; }
};

/// Closure of a set of records under conjugation x -> x+1 (conjugates of
/// bi-unitary perfect polynomials are bi-unitary perfect). Deduplicated and
/// canonically ordered; self-conjugate records appear once.
std::vector<BupRecord> conjugate_closure(const std::vector<BupRecord>& records);

/// Exhaustive search for bi-unitary perfect x^a (x+1)^b P^c with P in
/// {M1, M4, M5}, over the lemma-derived exponent sets (even exponents in
/// {4,6,8,10}, odd ones in {2^e*v - 1 : e <= 3, v in {1,3,5}}, c in
/// {1,2,3,7}). Expected hits: the conjugate closure of C1..C7.
SearchReport search_omega3(const SearchOptions& opts = {});

/// Exhaustive search for bi-unitary perfect x^a (x+1)^b P^c Q^d with P != Q
/// both among M1..M5 (even exponents in {4..14}, odd ones in
/// {2^e*v - 1 : e <= 3, v in {1,3,5,7}}, c, d in {1,2,3,7}). Expected hits:
/// the conjugate closure of C8..C13.
SearchReport search_omega4_mersenne(const SearchOptions& opts = {});

/// The three bounded searches for x^a (x+1)^b P^c Q^d with Q not a Mersenne
/// prime, over their fixed (P, Q) pairs and exponent sets. The first two
/// sub-cases (PQ and Q of the shape sigma(x^2m)) must come up empty; the
/// third (Q of the shape sigma(P^2m)) must find exactly D1, D2 and their
/// conjugates.
SearchReport search_omega4_nonmersenne(const SearchOptions& opts = {});

/// Independent completeness check: enumerate every candidate
/// x^a (x+1)^b * (product of at most max_omega - 2 odd prime powers) of
/// total degree <= max_degree, a, b >= 1, and report all bi-unitary perfect
/// hits. Candidates are built structurally from a precomputed table of odd
/// irreducibles, never by scanning raw masks. Expected hits: the two-prime
/// family x^a(x+1)^a (a = 2 or a = 2^n - 1) plus the catalog entries within
/// the bounds.
SearchReport blind_search(int max_degree, int max_omega, const SearchOptions& opts = {});

/// Indecomposable: no partition of the factors into two coprime nonconstant
/// parts has both parts bi-unitary perfect (exhaustive over the 2^omega
/// subsets).
bool is_ibup(const BupRecord& record);

struct VerifyReport {
    bool catalog_pass = false;      // every catalog C/D entry and its conjugate
    bool consistency_pass = false;  // blind hits == bounded hits + two-prime family
    std::vector<SearchReport> reports;
    bool pass = false;
    double elapsed_ms = 0.0;

    std::string verdict() const { return pass ? "pass" : "fail"; }
};

/// Run the catalog self-check, the three bounded searches and
/// blind_search(24, 4), and compare every hit list with the expected
/// catalog-derived sets. Also cross-checks the blind hits against the union
/// of the bounded hits plus the two-prime family, restricted to degree 24;
/// the two routes must agree exactly. Failures are verdicts, not errors.
VerifyReport verify_theorems(const SearchOptions& opts = {});

/// The expected hit sets, derived from the catalog.
std::vector<BupRecord> expected_omega3();
std::vector<BupRecord> expected_omega4_mersenne();
std::vector<BupRecord> expected_omega4_nonmersenne();
std::vector<BupRecord> expected_blind(int max_degree, int max_omega);

/// Members of the two-prime family x^a(x+1)^a: a = 2 or a = 2^n - 1.
bool is_two_prime_family_exponent(int a);

nlohmann::json to_json(const BupRecord& record);
nlohmann::json to_json(const SearchReport& report);
nlohmann::json to_json(const VerifyReport& report);

}  // namespace bupoly
