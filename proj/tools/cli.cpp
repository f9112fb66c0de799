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

#include "cli.hpp"

#include "bupoly/search.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <ostream>
#include <string_view>

namespace bupoly::cli {

namespace {

using nlohmann::json;

/// `@NAME` resolves through the catalog; anything else goes to the parser.
Poly resolve_poly(const std::string& text) {
    if (!text.empty() && text.front() == '@') return named_entry(text.substr(1)).poly;
    return parse_poly(text);
}

std::string format_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", ms);
    return buf;
}

std::string display_label(const BupRecord& r) {
    if (!r.label.empty()) return r.label;
    if (!r.conjugate_label.empty()) return "conj(" + r.conjugate_label + ")";
    return {};
}

void print_report_text(const SearchReport& r, std::ostream& out, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    out << pad << "case: " << r.space.case_id;
    if (r.space.max_degree >= 0)
        out << " (max_degree=" << r.space.max_degree << ", max_omega=" << r.space.max_omega << ")";
    out << "\n";
    out << pad << "candidates: " << r.candidate_count << "\n";
    out << pad << "elapsed: " << format_ms(r.elapsed_ms) << " ms\n";
    out << pad << "hits: " << r.hits.size() << "\n";
    for (const BupRecord& h : r.hits) {
        out << pad << "  " << to_string(h.factorization) << "  degree " << h.degree << "  omega "
            << h.omega;
        const std::string label = display_label(h);
        if (!label.empty()) out << "  [" << label << "]";
        out << "\n";
    }
    for (const SearchReport& sub : r.subcases) print_report_text(sub, out, indent + 2);
    out << pad << "verdict: " << r.verdict() << "\n";
}

void print_verify_text(const VerifyReport& r, std::ostream& out) {
    out << "catalog: " << (r.catalog_pass ? "pass" : "fail") << "\n";
    out << "bounded-vs-blind: " << (r.consistency_pass ? "pass" : "fail") << "\n";
    for (const SearchReport& rep : r.reports) {
        out << rep.space.case_id;
        if (rep.space.max_degree >= 0)
            out << "(" << rep.space.max_degree << "," << rep.space.max_omega << ")";
        out << ": " << rep.verdict() << " (" << rep.hits.size() << " hits, "
            << rep.candidate_count << " candidates, " << format_ms(rep.elapsed_ms) << " ms)\n";
        for (const SearchReport& sub : rep.subcases)
            out << "  " << sub.space.case_id << ": " << sub.verdict() << " (" << sub.hits.size()
                << " hits, " << sub.candidate_count << " candidates)\n";
    }
    out << "verdict: " << r.verdict() << "\n";
}

json poly_json(const Poly& p) {
    return json{{"sum", to_string(p)},
                {"hex", to_hex(p)},
                {"factored", p.is_zero() ? "0" : to_string(factorize(p))},
                {"degree", p.is_zero() ? json(nullptr) : json(p.degree())}};
}

struct Options {
    std::string format = "text";

    std::string factor_poly;

    std::string sigma_kind = "sigma";
    std::string sigma_poly;

    bool check_bup = false;
    bool check_perfect = false;
    bool check_unitary_perfect = false;
    bool check_irreducible = false;
    bool check_odd = false;
    bool check_mersenne = false;
    bool check_ibup = false;
    std::string check_poly;

    int mersenne_max_degree = 12;

    std::vector<std::string> catalog_names;

    std::string search_case;
    bool search_blind = false;
    int max_degree = 24;
    int max_omega = 4;
    std::uint64_t divisor_cap = kDefaultDivisorCap;
    int blind_ceiling = 24;

    bool verify_all = false;
};

int run_factor(const Options& o, std::ostream& out) {
    const Poly p = resolve_poly(o.factor_poly);
    const Factorization f = factorize(p);
    if (o.format == "json") {
        json factors = json::array();
        for (const auto& pp : f.factors)
            factors.push_back({{"prime", to_string(pp.prime)},
                               {"hex", to_hex(pp.prime)},
                               {"degree", pp.prime.degree()},
                               {"exp", pp.exp}});
        out << json{{"input", to_string(p)},
                    {"poly_hex", to_hex(p)},
                    {"degree", p.degree()},
                    {"omega", f.factors.size()},
                    {"factored", to_string(f)},
                    {"factors", std::move(factors)}}
                   .dump(2)
            << "\n";
    } else {
        out << to_string(f) << "\n";
    }
    return 0;
}

int run_sigma(const Options& o, std::ostream& out) {
    const Poly p = resolve_poly(o.sigma_poly);
    Poly result;
    if (o.sigma_kind == "sigma")
        result = sigma(p);
    else if (o.sigma_kind == "star")
        result = sigma_star(p);
    else
        result = sigma_bistar(p);
    if (o.format == "json") {
        out << json{{"kind", o.sigma_kind}, {"input", to_string(p)}, {"result", poly_json(result)}}
                   .dump(2)
            << "\n";
    } else {
        out << format_poly(result, PolyStyle::factored) << "\n";
    }
    return 0;
}

int run_check(const Options& o, std::ostream& out) {
    const Poly p = resolve_poly(o.check_poly);
    bool value = false;
    std::string predicate;
    json extra;
    if (o.check_bup) {
        predicate = "bup";
        value = is_bup(p);
    } else if (o.check_perfect) {
        predicate = "perfect";
        value = is_perfect(p);
    } else if (o.check_unitary_perfect) {
        predicate = "unitary-perfect";
        value = is_unitary_perfect(p);
    } else if (o.check_irreducible) {
        predicate = "irreducible";
        value = is_irreducible(p);
    } else if (o.check_odd) {
        predicate = "odd";
        value = is_odd_poly(p);
    } else if (o.check_mersenne) {
        predicate = "mersenne";
        const auto witness = is_mersenne_prime(p);
        value = witness.has_value();
        if (witness) extra = json{{"a", witness->a}, {"b", witness->b}};
    } else if (o.check_ibup) {
        predicate = "ibup";
        value = is_bup(p) && is_ibup(make_bup_record(factorize(p)));
    }
    if (o.format == "json") {
        json j{{"predicate", predicate}, {"input", to_string(p)}, {"value", value}};
        if (!extra.is_null()) j["witness"] = std::move(extra);
        out << j.dump(2) << "\n";
    } else {
        out << (value ? "true" : "false");
        if (value && o.check_mersenne) {
            const auto witness = is_mersenne_prime(p);
            out << " (a=" << witness->a << ", b=" << witness->b << ")";
        }
        out << "\n";
    }
    return value ? 0 : 1;
}

int run_mersenne(const Options& o, std::ostream& out) {
    const auto primes = enumerate_mersenne(o.mersenne_max_degree);
    if (o.format == "json") {
        json rows = json::array();
        for (const auto& m : primes)
            rows.push_back({{"poly", to_string(m.poly)},
                            {"hex", to_hex(m.poly)},
                            {"degree", m.poly.degree()},
                            {"a", m.a},
                            {"b", m.b},
                            {"label", name_of(m.poly)}});
        out << json{{"max_degree", o.mersenne_max_degree},
                    {"count", primes.size()},
                    {"mersenne_primes", std::move(rows)}}
                   .dump(2)
            << "\n";
    } else {
        for (const auto& m : primes) {
            out << to_string(m.poly) << "  a=" << m.a << " b=" << m.b;
            const std::string label = name_of(m.poly);
            if (!label.empty()) out << "  [" << label << "]";
            out << "\n";
        }
    }
    return 0;
}

int run_catalog(const Options& o, std::ostream& out) {
    std::vector<const CatalogEntry*> entries;
    if (o.catalog_names.empty()) {
        for (const CatalogEntry& e : named_constants()) entries.push_back(&e);
    } else {
        for (const std::string& n : o.catalog_names) entries.push_back(&named_entry(n));
    }
    if (o.format == "json") {
        json rows = json::array();
        for (const CatalogEntry* e : entries)
            rows.push_back({{"name", e->name},
                            {"factored", to_string(e->factorization)},
                            {"sum", to_string(e->poly)},
                            {"hex", to_hex(e->poly)},
                            {"degree", e->poly.degree()},
                            {"omega", e->factorization.factors.size()}});
        out << json{{"entries", std::move(rows)}}.dump(2) << "\n";
    } else {
        for (const CatalogEntry* e : entries) {
            out << e->name << "\t" << to_string(e->factorization) << "\tdegree "
                << e->poly.degree() << "\tomega " << e->factorization.factors.size() << "\n";
        }
    }
    return 0;
}

int run_search(const Options& o, std::ostream& out, std::ostream& err, bool max_degree_set,
               bool max_omega_set) {
    std::string which = o.search_case;
    if (o.search_blind) which = "blind";
    if (which != "blind" && (max_degree_set || max_omega_set)) {
        err << "error: --max-degree/--max-omega apply to the blind search only\n";
        return 2;
    }
    SearchOptions opts;
    opts.divisor_cap = o.divisor_cap;
    opts.blind_ceiling = o.blind_ceiling;
    SearchReport report;
    if (which == "omega3")
        report = search_omega3(opts);
    else if (which == "omega4-mersenne")
        report = search_omega4_mersenne(opts);
    else if (which == "omega4-nonmersenne")
        report = search_omega4_nonmersenne(opts);
    else
        report = blind_search(o.max_degree, o.max_omega, opts);
    if (o.format == "json")
        out << to_json(report).dump(2) << "\n";
    else
        print_report_text(report, out);
    return report.pass ? 0 : 1;
}

int run_verify(const Options& o, std::ostream& out) {
    SearchOptions opts;
    opts.divisor_cap = o.divisor_cap;
    const VerifyReport report = verify_theorems(opts);
    if (o.format == "json")
        out << to_json(report).dump(2) << "\n";
    else
        print_verify_text(report, out);
    return report.pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Computer algebra for F2[x]: divisor-sum functions, Mersenne primes and "
                 "exhaustive searches for bi-unitary perfect polynomials"};
    app.name("bupoly");
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* factor = app.add_subcommand("factor", "Factor a polynomial into irreducibles");
    factor->fallthrough();
    factor->add_option("poly", o.factor_poly, "Polynomial (sum, product or hex form, or @NAME)")
        ->required();

    auto* sig = app.add_subcommand("sigma", "Divisor sums: sigma, sigma* and sigma**");
    sig->fallthrough();
    sig->add_option("--kind", o.sigma_kind, "Which divisor sum")
        ->check(CLI::IsMember({"sigma", "star", "bistar"}))
        ->capture_default_str();
    sig->add_option("poly", o.sigma_poly, "Polynomial or @NAME")->required();

    auto* check = app.add_subcommand("check", "Predicates on a polynomial");
    check->fallthrough();
    auto* preds = check->add_option_group("predicate", "Exactly one predicate");
    preds->add_flag("--bup", o.check_bup, "Bi-unitary perfect: sigma**(A) = A");
    preds->add_flag("--perfect", o.check_perfect, "Perfect: sigma(A) = A");
    preds->add_flag("--unitary-perfect", o.check_unitary_perfect, "Unitary perfect: sigma*(A) = A");
    preds->add_flag("--irreducible", o.check_irreducible, "Irreducible over F2");
    preds->add_flag("--odd", o.check_odd, "Coprime to x(x+1)");
    preds->add_flag("--mersenne", o.check_mersenne, "Mersenne prime 1+x^a(x+1)^b");
    preds->add_flag("--ibup", o.check_ibup, "Indecomposable bi-unitary perfect");
    preds->require_option(1);
    check->add_option("poly", o.check_poly, "Polynomial or @NAME")->required();

    auto* mers = app.add_subcommand("mersenne", "Enumerate Mersenne primes by degree");
    mers->fallthrough();
    mers->add_option("--max-degree", o.mersenne_max_degree, "Largest degree to enumerate")
        ->check(CLI::Range(2, 30))
        ->capture_default_str();

    auto* cat = app.add_subcommand("catalog", "Show the built-in named polynomials");
    cat->fallthrough();
    cat->add_option("names", o.catalog_names, "Entries to show (default: all)");

    auto* search = app.add_subcommand("search", "Run a bi-unitary perfect search");
    search->fallthrough();
    auto* cases = search->add_option_group("case", "Which search to run");
    auto* case_opt = cases->add_option("--case", o.search_case, "Search case")
                         ->check(CLI::IsMember(
                             {"omega3", "omega4-mersenne", "omega4-nonmersenne", "blind"}));
    cases->add_flag("--blind", o.search_blind, "Shortcut for --case blind");
    cases->require_option(1);
    auto* md = search->add_option("--max-degree", o.max_degree, "Blind search degree bound")
                   ->capture_default_str();
    auto* mo = search->add_option("--max-omega", o.max_omega,
                                  "Blind search bound on distinct irreducible factors")
                   ->capture_default_str();
    search->add_option("--divisor-cap", o.divisor_cap, "Divisor-enumeration cap for hit checks")
        ->capture_default_str();
    search->add_option("--blind-ceiling", o.blind_ceiling, "Hard ceiling for --max-degree")
        ->capture_default_str();

    auto* verify = app.add_subcommand(
        "verify", "Verify the full classification of bi-unitary perfect polynomials "
                  "with at most four irreducible factors");
    verify->fallthrough();
    verify->add_flag("--all", o.verify_all, "Run every check (the default)");
    verify->add_option("--divisor-cap", o.divisor_cap, "Divisor-enumeration cap for hit checks");

    std::vector<std::string> argv_strings = args;
    std::vector<char*> argv;
    argv.push_back(const_cast<char*>("bupoly"));
    for (std::string& s : argv_strings) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(factor)) return run_factor(o, out);
        if (app.got_subcommand(sig)) return run_sigma(o, out);
        if (app.got_subcommand(check)) return run_check(o, out);
        if (app.got_subcommand(mers)) return run_mersenne(o, out);
        if (app.got_subcommand(cat)) return run_catalog(o, out);
        if (app.got_subcommand(search))
            return run_search(o, out, err, md->count() > 0, mo->count() > 0);
        if (app.got_subcommand(verify)) return run_verify(o, out);
        (void)case_opt;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const divisor_cap_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command selected\n";
    return 2;
}

}  // namespace bupoly::cli
