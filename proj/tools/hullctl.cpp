/*
   Copyright 2026 The hullcodes authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file hullctl.cpp
 * @brief Command-line driver for the hullcodes library.
 *
 * Subcommands:
 *   cosets           q-cyclotomic cosets mod n with symmetry flags
 *   factor           basic-irreducible factors of X^n - 1 over GR(p^a, r)
 *   code             one code from a defining multiset: params, dual, hull
 *   enumerate-hulls  achievable Euclidean hull parameter tuples
 *   average          expected hull q-dimension, optionally checked exactly
 *   count            number of codes with a given hull q-dimension
 *   verify           brute-force oracle sweep over a grid file
 *
 * Exit codes: 0 success (including reported enumeration differences — those
 * are data), 1 usage, 2 validation, 3 budget exceeded, 4 oracle mismatch.
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hullcodes/bruteforce.hpp"
#include "hullcodes/cosetlab.hpp"
#include "hullcodes/grarith.hpp"
#include "hullcodes/hullcount.hpp"
#include "hullcodes/ringpoly.hpp"
#include "hullcodes/serialcodes.hpp"

using nlohmann::json;
using namespace hullcodes;

namespace {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_validation = 2,
    exit_budget = 3,
    exit_mismatch = 4,
};

struct VerifyFailure : std::runtime_error {
    json report;
    VerifyFailure(std::string msg, json rep)
        : std::runtime_error(std::move(msg)), report(std::move(rep)) {}
};

struct Options {
    std::string format = "table";
    std::optional<std::uint64_t> budget;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string out;
};

std::uint64_t budget_or(const Options& opt, std::uint64_t fallback) {
    return opt.budget ? *opt.budget : fallback;
}

RingSpec parse_ring(const std::string& text) {
    if (!text.empty() && !std::isdigit(static_cast<unsigned char>(text[0])))
        return RingSpec::named(text);
    std::vector<i64> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(std::stoll(item));
    if (vals.size() != 5)
        throw std::invalid_argument("ring must be a name or p,a,r,e,s");
    return RingSpec::make(vals[0], static_cast<int>(vals[1]), static_cast<int>(vals[2]),
                          static_cast<int>(vals[3]), static_cast<int>(vals[4]));
}

json ring_json(const RingSpec& spec) {
    return json{{"p", spec.p}, {"a", spec.a}, {"r", spec.r}, {"e", spec.e}, {"s", spec.s}};
}

/** Multiset argument: inline JSON or a path to a JSON file, as coset
 *  representatives per slot, e.g. [[0],[3],[1]]. */
DefiningMultiset parse_multiset(const CosetAtlas& atlas, int s, const std::string& arg) {
    std::string text = arg;
    if (std::ifstream in{arg}; in.good())
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    const json reps = json::parse(text);
    if (!reps.is_array() || static_cast<int>(reps.size()) != s + 1)
        throw std::invalid_argument("multiset must be an array of s+1 representative lists");
    std::vector<std::vector<i64>> parts(reps.size());
    for (std::size_t t = 0; t < reps.size(); ++t) {
        if (!reps[t].is_array())
            throw std::invalid_argument("multiset slots must be arrays of residues");
        for (const auto& rep : reps[t]) {
            const auto& c = atlas.cosets[coset_index_of(atlas, rep.get<i64>())].elems;
            parts[t].insert(parts[t].end(), c.begin(), c.end());
        }
    }
    return multiset_make(atlas.n, s, parts);
}

/** Sorted coset representatives of each part, the inverse of parse_multiset. */
json multiset_reps_json(const CosetAtlas& atlas, const DefiningMultiset& A) {
    json out = json::array();
    for (const auto& part : A.parts) {
        std::set<i64> reps;
        for (i64 z : part) reps.insert(atlas.cosets[coset_index_of(atlas, z)].rep);
        out.push_back(reps);
    }
    return out;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(opt.out);
    if (!out) throw std::invalid_argument("cannot open output file: " + opt.out);
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) row += ',';
        row += cells[i];
    }
    return row;
}

std::string join_i64(const std::vector<i64>& xs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

/* ======================================================================== */
/* cosets                                                                   */
/* ======================================================================== */

int run_cosets(const Options& opt, i64 n, i64 q) {
    const CosetAtlas atlas = build_atlas(n, q);
    json rep{{"n", n},
             {"q", q},
             {"omega", omega_count(n, q)},
             {"Bnq", B_count(n, q)},
             {"cosets", json::array()}};
    for (const Coset& c : atlas.cosets)
        rep["cosets"].push_back(json{{"rep", c.rep},
                                     {"size", c.size()},
                                     {"symmetric", c.symmetric},
                                     {"elems", c.elems}});
    if (opt.format == "json") {
        emit(opt, rep.dump(2));
    } else if (opt.format == "csv") {
        std::string text = "rep,size,symmetric,elems\n";
        for (const Coset& c : atlas.cosets)
            text += csv_row({std::to_string(c.rep), std::to_string(c.size()),
                             c.symmetric ? "1" : "0", join_i64(c.elems, " ")}) +
                    "\n";
        emit(opt, text);
    } else {
        std::string text = "q-cyclotomic cosets mod " + std::to_string(n) +
                           " (q = " + std::to_string(q) + ")\n";
        for (const Coset& c : atlas.cosets)
            text += "  C(" + std::to_string(c.rep) + ") = {" + join_i64(c.elems, ", ") + "}" +
                    (c.symmetric ? "  [symmetric]" : "  [asymmetric]") + "\n";
        text += "omega = " + std::to_string(omega_count(n, q)) +
                ", B = " + std::to_string(B_count(n, q));
        emit(opt, text);
    }
    return exit_ok;
}

/* ======================================================================== */
/* factor                                                                   */
/* ======================================================================== */

int run_factor(const Options& opt, const RingSpec& spec, i64 n) {
    const GaloisRingCtx gr = make_galois_ring(spec.p, spec.a, spec.r);
    const GRFactorTable table = gr_factor_xn1(gr, n);
    json rep{{"n", n}, {"ring", ring_json(spec)}, {"factors", json::array()}};
    std::string text = "X^" + std::to_string(n) + " - 1 over GR(" +
                       std::to_string(ipow64(spec.p, spec.a)) + ", " + std::to_string(spec.r) +
                       ")\n";
    std::string csv = "rep,degree,coeffs\n";
    for (const Coset& c : table.atlas.cosets) {
        const GRPoly f = omega(table, c.elems);
        json coeffs = json::array();
        std::string flat;
        for (const GRElem& ce : f) {
            coeffs.push_back(ce);
            if (!flat.empty()) flat += ' ';
            flat += "(" + join_i64(ce, " ") + ")";
        }
        rep["factors"].push_back(
            json{{"rep", c.rep}, {"degree", static_cast<i64>(f.size()) - 1}, {"coeffs", coeffs}});
        text += "  Omega(C(" + std::to_string(c.rep) + ")), degree " +
                std::to_string(f.size() - 1) + ": " + flat + "\n";
        csv += csv_row({std::to_string(c.rep), std::to_string(f.size() - 1), flat}) + "\n";
    }
    if (opt.format == "json")
        emit(opt, rep.dump(2));
    else if (opt.format == "csv")
        emit(opt, csv);
    else
        emit(opt, text);
    return exit_ok;
}

/* ======================================================================== */
/* code                                                                     */
/* ======================================================================== */

int run_code(const Options& opt, const RingSpec& spec, i64 n, const std::string& mspec, i64 ell) {
    const CosetAtlas atlas = build_atlas(n, spec.q);
    const DefiningMultiset A = parse_multiset(atlas, spec.s, mspec);
    const DefiningMultiset D = dual_multiset(spec, A, ell);
    const DefiningMultiset H = hull_multiset(spec, A, ell);
    json rep{{"n", n},
             {"ring", ring_json(spec)},
             {"ell", ell},
             {"multiset", multiset_reps_json(atlas, A)},
             {"params", multiset_params(A)},
             {"qdim", multiset_qdim(A)},
             {"dual", json{{"multiset", multiset_reps_json(atlas, D)},
                           {"params", multiset_params(D)},
                           {"qdim", multiset_qdim(D)}}},
             {"hull", json{{"multiset", multiset_reps_json(atlas, H)},
                           {"params", multiset_params(H)},
                           {"qdim", multiset_qdim(H)}}},
             {"lcd", is_lcd(spec, A, ell)},
             {"self_orthogonal", is_self_orthogonal(spec, A, ell)},
             {"self_dual", is_self_dual(spec, A, ell)}};
    if (opt.format == "json") {
        emit(opt, rep.dump(2));
        return exit_ok;
    }
    if (opt.format == "csv") {
        std::string text = "field,value\n";
        for (const char* key : {"params", "qdim", "lcd", "self_orthogonal", "self_dual"})
            text += csv_row({key, rep[key].dump()}) + "\n";
        text += csv_row({"dual_params", rep["dual"]["params"].dump()}) + "\n";
        text += csv_row({"hull_params", rep["hull"]["params"].dump()}) + "\n";
        text += csv_row({"hull_qdim", rep["hull"]["qdim"].dump()}) + "\n";
        emit(opt, text);
        return exit_ok;
    }
    std::ostringstream text;
    text << "code over " << spec.label() << ", n = " << n << ", ell = " << ell << "\n"
         << "  multiset (reps): " << rep["multiset"].dump() << "\n"
         << "  params " << rep["params"].dump() << ", qdim " << multiset_qdim(A) << "\n"
         << "  dual   " << rep["dual"]["multiset"].dump() << ", params "
         << rep["dual"]["params"].dump() << ", qdim " << multiset_qdim(D) << "\n"
         << "  hull   " << rep["hull"]["multiset"].dump() << ", params "
         << rep["hull"]["params"].dump() << ", qdim " << multiset_qdim(H) << "\n"
         << "  lcd " << is_lcd(spec, A, ell) << ", self-orthogonal "
         << is_self_orthogonal(spec, A, ell) << ", self-dual " << is_self_dual(spec, A, ell);
    emit(opt, text.str());
    return exit_ok;
}

/* ======================================================================== */
/* enumerate-hulls                                                          */
/* ======================================================================== */

json tuples_json(const std::set<std::vector<i64>>& tuples,
                 const std::map<std::vector<i64>, std::uint64_t>* tally) {
    json out = json::array();
    for (const auto& k : tuples) {
        json row{{"k", k}};
        if (tally) {
            const auto it = tally->find(k);
            row["count"] = it == tally->end() ? 0 : it->second;
        }
        out.push_back(row);
    }
    return out;
}

std::string tuples_table(int s, const std::set<std::vector<i64>>& tuples) {
    std::ostringstream text;
    if (s == 3) {
        // Rows keyed by (k_0, k_1); the k_2 values of each row listed inline.
        std::map<std::pair<i64, i64>, std::vector<i64>> rows;
        for (const auto& k : tuples) rows[{k[0], k[1]}].push_back(k[2]);
        text << "k_0  k_1  k_2\n";
        for (const auto& [pre, k2s] : rows)
            text << pre.first << "    " << pre.second << "    " << join_i64(k2s, " ") << "\n";
    } else {
        text << "(k_0";
        for (int t = 1; t < s; ++t) text << ", k_" << t;
        text << ")\n";
        for (const auto& k : tuples) text << "(" << join_i64(k, ", ") << ")\n";
    }
    return text.str();
}

int run_enumerate(const Options& opt, const RingSpec& spec, i64 n, const std::string& method) {
    const i64 q = spec.q;
    const int s = spec.s;
    json rep{{"method", method},
             {"n", n},
             {"ring", ring_json(spec)},
             {"aleph", aleph_set(n, q, s)},
             {"Bnq", B_count(n, q)}};
    const mpq_class avg = average_hull_qdim(n, q, s);
    rep["average"] = json{{"num", avg.get_num().get_str()}, {"den", avg.get_den().get_str()}};

    std::set<std::vector<i64>> alg, exact;
    std::map<std::vector<i64>, std::uint64_t> tally;
    if (method == "algorithm1" || method == "both")
        alg = algorithm1(n, q, s, budget_or(opt, 50'000'000));
    if (method == "exact" || method == "both") {
        HullEnumeration E = enumerate_hulls_exact(n, q, s, budget_or(opt, 10'000'000), opt.jobs);
        exact = std::move(E.tuples);
        tally = std::move(E.tuple_tally);
    }
    const auto& primary = method == "exact" ? exact : alg;
    rep["tuples"] = tuples_json(primary, method == "exact" ? &tally : nullptr);

    std::set<std::vector<i64>> only_exact, only_alg;
    if (method == "both") {
        rep["exact_tuples"] = tuples_json(exact, &tally);
        for (const auto& k : exact)
            if (!alg.count(k)) only_exact.insert(k);
        for (const auto& k : alg)
            if (!exact.count(k)) only_alg.insert(k);
        rep["difference"] = json{{"only_exact", tuples_json(only_exact, nullptr)},
                                 {"only_algorithm1", tuples_json(only_alg, nullptr)},
                                 {"note", "difference is reported as data, not a failure"}};
    }

    if (opt.format == "json") {
        emit(opt, rep.dump(2));
        return exit_ok;
    }
    if (opt.format == "csv") {
        std::string text;
        for (int t = 0; t < s; ++t) text += (t ? ",k_" : "k_") + std::to_string(t);
        text += method == "exact" ? ",count\n" : "\n";
        for (const auto& k : primary) {
            text += join_i64(k, ",");
            if (method == "exact") text += "," + std::to_string(tally[k]);
            text += "\n";
        }
        emit(opt, text);
        return exit_ok;
    }
    std::ostringstream text;
    text << "achievable Euclidean hull parameters, n = " << n << ", " << spec.label() << " ("
         << method << ")\n";
    text << tuples_table(s, primary);
    if (method == "both") {
        if (only_exact.empty() && only_alg.empty()) {
            text << "methods agree: " << exact.size() << " tuples\n";
        } else {
            text << "METHODS DIFFER (reported as data):\n";
            for (const auto& k : only_exact) text << "  exact only: (" << join_i64(k, ", ") << ")\n";
            for (const auto& k : only_alg)
                text << "  algorithm1 only: (" << join_i64(k, ", ") << ")\n";
        }
    }
    text << "aleph = " << json(aleph_set(n, q, s)).dump() << ", B = " << B_count(n, q)
         << ", average hull qdim = " << avg.get_str();
    emit(opt, text.str());
    return exit_ok;
}

/* ======================================================================== */
/* average / count                                                          */
/* ======================================================================== */

int run_average(const Options& opt, const RingSpec& spec, i64 n, bool check_exact) {
    const i64 q = spec.q;
    const int s = spec.s;
    const mpq_class avg = average_hull_qdim(n, q, s);
    json rep{{"n", n},
             {"ring", ring_json(spec)},
             {"average", json{{"num", avg.get_num().get_str()}, {"den", avg.get_den().get_str()}}},
             {"in_Nq", in_Nq(n, q)},
             {"Bnq", B_count(n, q)}};
    if (std::gcd(n, q) == 1 && !in_Nq(n, q)) {
        rep["lower_bound"] = average_bound_lower(n, s).get_str();
        rep["upper_bound"] = average_bound_upper(n, s).get_str();
    }
    bool match = true;
    if (check_exact) {
        const HullEnumeration E =
            enumerate_hulls_exact(n, q, s, budget_or(opt, 10'000'000), opt.jobs);
        const mpq_class exact = enumeration_mean(E);
        match = exact == avg;
        rep["exact"] = json{{"num", exact.get_num().get_str()},
                            {"den", exact.get_den().get_str()},
                            {"codes", E.total},
                            {"match", match}};
    }
    if (opt.format == "json") {
        emit(opt, rep.dump(2));
    } else if (opt.format == "csv") {
        std::string text = "n,num,den,match\n" +
                           csv_row({std::to_string(n), avg.get_num().get_str(),
                                    avg.get_den().get_str(), match ? "1" : "0"}) +
                           "\n";
        emit(opt, text);
    } else {
        std::ostringstream text;
        text << "average hull qdim, n = " << n << ", " << spec.label() << ": " << avg.get_str();
        if (check_exact)
            text << (match ? "  [exact check pass: " : "  [EXACT CHECK FAIL: ")
                 << rep["exact"]["num"].get<std::string>() << "/"
                 << rep["exact"]["den"].get<std::string>() << " over "
                 << rep["exact"]["codes"].get<std::uint64_t>() << " codes]";
        emit(opt, text.str());
    }
    return match ? exit_ok : exit_mismatch;
}

int run_count(const Options& opt, const RingSpec& spec, i64 n, i64 tau) {
    const auto poly = count_hulls(n, spec.q, spec.s);
    const mpz_class count =
        (tau >= 0 && tau < static_cast<i64>(poly.size())) ? poly[static_cast<std::size_t>(tau)] : 0;
    mpz_class total = 0;
    for (const auto& c : poly) total += c;
    json rep{{"n", n},
             {"ring", ring_json(spec)},
             {"tau", tau},
             {"count", count.get_str()},
             {"total", total.get_str()}};
    if (opt.format == "json")
        emit(opt, rep.dump(2));
    else if (opt.format == "csv")
        emit(opt, "n,tau,count,total\n" +
                      csv_row({std::to_string(n), std::to_string(tau), count.get_str(),
                               total.get_str()}) +
                      "\n");
    else
        emit(opt, "codes of length " + std::to_string(n) + " over " + spec.label() +
                      " with hull qdim " + std::to_string(tau) + ": " + count.get_str() +
                      " of " + total.get_str());
    return exit_ok;
}

/* ======================================================================== */
/* verify                                                                   */
/* ======================================================================== */

json vector_witness(const BruteContext& ctx, std::uint64_t packed) {
    const RVec v = unpack_vector(ctx, packed);
    json coords = json::array();
    for (const RElem& c : v) coords.push_back(c);
    return json{{"packed", packed}, {"coords", coords}};
}

struct Oracle {
    ChainRingCtx ring;
    GRFactorTable table;
    CosetAtlas atlas;
    BruteContext ctx;
};

/** One (ring, n, multiset, ell) oracle case; throws VerifyFailure on mismatch. */
void verify_case(const RingSpec& spec, const Oracle& o, const DefiningMultiset& A, i64 ell) {
    const CyclicSerialCode C = make_code(o.ring, o.table, A);
    const VectorSet S = enumerate_codewords(o.ctx, C);
    const VectorSet D = brute_dual(o.ctx, S, ell);
    const VectorSet H = set_intersect(S, D);
    const CyclicSerialCode Ch = hull_code(C, ell);
    const VectorSet Ha = enumerate_codewords(o.ctx, Ch);
    const bool sets_match = H == Ha;
    const bool profile_match = sets_match && profile_of_set(o.ctx, H) == code_params(Ch);
    if (sets_match && profile_match) return;
    json rep{{"ring", ring_json(spec)},
             {"n", A.n},
             {"ell", ell},
             {"multiset", multiset_reps_json(o.atlas, A)},
             {"analytic_params", code_params(Ch)},
             {"brute_params", sets_match ? json(profile_of_set(o.ctx, H)) : json()}};
    const i64 wa = diff_witness(Ha, H);
    const i64 wb = diff_witness(H, Ha);
    if (wa >= 0)
        rep["only_analytic"] = vector_witness(o.ctx, static_cast<std::uint64_t>(wa));
    if (wb >= 0) rep["only_brute"] = vector_witness(o.ctx, static_cast<std::uint64_t>(wb));
    throw VerifyFailure("hull oracle mismatch", rep);
}

int run_verify(const Options& opt, const std::string& grid_path) {
    std::ifstream in(grid_path);
    if (!in) throw std::invalid_argument("cannot open grid file: " + grid_path);
    const json grid = json::parse(in);
    if (!grid.contains("cases") || !grid["cases"].is_array())
        throw std::invalid_argument("grid file needs a 'cases' array");
    const i64 sample = grid.value("sample", static_cast<i64>(0));
    std::mt19937_64 rng(opt.seed);

    i64 codes_checked = 0, cases = 0;
    for (const json& c : grid["cases"]) {
        const RingSpec spec = parse_ring(c.at("ring").get<std::string>());
        std::vector<i64> ells;
        if (c.contains("ells"))
            ells = c["ells"].get<std::vector<i64>>();
        else
            for (i64 ell = 0; ell < spec.r; ++ell) ells.push_back(ell);
        for (const i64 n : c.at("lens").get<std::vector<i64>>()) {
            ++cases;
            Oracle o{make_ring(spec), gr_factor_xn1(make_galois_ring(spec.p, spec.a, spec.r), n),
                     build_atlas(n, spec.q),
                     make_brute_context(make_ring(spec), n, budget_or(opt, 1ULL << 24))};
            const int s = spec.s;
            const auto m = o.atlas.cosets.size();
            std::vector<DefiningMultiset> multisets;
            if (sample <= 0) {
                std::vector<int> rho(m, 0);
                while (true) {
                    multisets.push_back(multiset_from_part_indices(o.atlas, s, rho));
                    std::size_t k = 0;
                    while (k < m && rho[k] == s) rho[k++] = 0;
                    if (k == m) break;
                    ++rho[k];
                }
            } else {
                std::uniform_int_distribution<int> dist(0, s);
                for (i64 rep = 0; rep < sample; ++rep) {
                    std::vector<int> rho(m);
                    for (auto& x : rho) x = dist(rng);
                    multisets.push_back(multiset_from_part_indices(o.atlas, s, rho));
                }
            }
            for (const DefiningMultiset& A : multisets)
                for (const i64 ell : ells) {
                    verify_case(spec, o, A, ell);
                    ++codes_checked;
                }
        }
    }
    json rep{{"cases", cases}, {"codes_checked", codes_checked}, {"mismatches", 0}};
    if (opt.format == "json")
        emit(opt, rep.dump(2));
    else
        emit(opt, "verify: " + std::to_string(codes_checked) + " oracle cases over " +
                      std::to_string(cases) + " grids, zero mismatches");
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hullcodes: cyclic serial codes over finite chain rings"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    Options opt;
    if (const char* env = std::getenv("HULLCTL_BUDGET")) opt.budget = std::stoull(env);
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    std::uint64_t budget_flag = 0;
    auto* budget_opt =
        app.add_option("--budget", budget_flag, "Enumeration budget (overrides HULLCTL_BUDGET)");
    app.add_option("--seed", opt.seed, "Seed for sampled property checks")->capture_default_str();
    app.add_option("--jobs", opt.jobs, "Worker cap for parallel scans")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--out", opt.out, "Write the report to a file instead of stdout");

    std::string ring_text = "Z4", method = "algorithm1", mspec, grid_path;
    i64 n = 1, q = 2, ell = 0, tau = 0;
    bool check_exact = false;

    CLI::App* sc_cosets = app.add_subcommand("cosets", "q-cyclotomic cosets mod n");
    sc_cosets->add_option("--n", n, "Length")->required();
    sc_cosets->add_option("--q", q, "Residue field size")->required();

    CLI::App* sc_factor = app.add_subcommand("factor", "Factor X^n - 1 over GR(p^a, r)");
    sc_factor->add_option("--n", n, "Length")->required();
    sc_factor->add_option("--ring", ring_text, "Ring: name or p,a,r,e,s")->required();

    CLI::App* sc_code = app.add_subcommand("code", "Analyze one code from a defining multiset");
    sc_code->add_option("--ring", ring_text, "Ring: name or p,a,r,e,s")->required();
    sc_code->add_option("--n", n, "Length")->required();
    sc_code->add_option("--multiset", mspec, "JSON representatives (inline or file)")->required();
    sc_code->add_option("--ell", ell, "Galois inner product twist");

    CLI::App* sc_enum = app.add_subcommand("enumerate-hulls", "Achievable hull parameter tuples");
    sc_enum->add_option("--ring", ring_text, "Ring: name or p,a,r,e,s")->required();
    sc_enum->add_option("--n", n, "Length")->required();
    sc_enum->add_option("--method", method, "algorithm1 | exact | both")
        ->check(CLI::IsMember({"algorithm1", "exact", "both"}))
        ->capture_default_str();

    CLI::App* sc_avg = app.add_subcommand("average", "Expected hull q-dimension");
    sc_avg->add_option("--ring", ring_text, "Ring: name or p,a,r,e,s")->required();
    sc_avg->add_option("--n", n, "Length")->required();
    sc_avg->add_flag("--check-exact", check_exact, "Cross-check against the exhaustive mean");

    CLI::App* sc_count = app.add_subcommand("count", "Codes with a given hull q-dimension");
    sc_count->add_option("--ring", ring_text, "Ring: name or p,a,r,e,s")->required();
    sc_count->add_option("--n", n, "Length")->required();
    sc_count->add_option("--tau", tau, "Hull q-dimension")->required();

    CLI::App* sc_verify = app.add_subcommand("verify", "Run brute-force oracle suites");
    sc_verify->add_option("--grid", grid_path, "JSON grid file")->required();

    // Let the global flags (--format, --budget, ...) appear after the
    // subcommand name as well as before it.
    for (CLI::App* sc : {sc_cosets, sc_factor, sc_code, sc_enum, sc_avg, sc_count, sc_verify})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }
    if (*budget_opt) opt.budget = budget_flag;

    try {
        if (sc_cosets->parsed()) return run_cosets(opt, n, q);
        const RingSpec spec = sc_verify->parsed() ? RingSpec{} : parse_ring(ring_text);
        if (sc_factor->parsed()) return run_factor(opt, spec, n);
        if (sc_code->parsed()) return run_code(opt, spec, n, mspec, ell);
        if (sc_enum->parsed()) return run_enumerate(opt, spec, n, method);
        if (sc_avg->parsed()) return run_average(opt, spec, n, check_exact);
        if (sc_count->parsed()) return run_count(opt, spec, n, tau);
        if (sc_verify->parsed()) return run_verify(opt, grid_path);
        std::cerr << "no subcommand selected\n";
        return exit_usage;
    } catch (const VerifyFailure& e) {
        std::cerr << e.what() << "\n" << e.report.dump(2) << "\n";
        return exit_mismatch;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const json::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return exit_validation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return exit_validation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation;
    }
}
