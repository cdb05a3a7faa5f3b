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
 * @file hullcount.hpp
 * @brief Counting and enumeration of Euclidean hull parameters of cyclic
 *        serial codes over a chain ring with residue field F_q and radical
 *        nilpotency s.
 *
 * Everything in this header works on the combinatorial shadow of a code: the
 * per-coset depth profile.  A defining multiset assigns every q-cyclotomic
 * coset mod n a depth in [0, s]; the Euclidean hull of the resulting code
 * has, per symmetric coset at depth rho, depth max(rho, s - rho), and per
 * asymmetric pair at depths (rho_y, rho_z), depths
 * (max(rho_y, s - rho_z), max(rho_z, s - rho_y)).
 *
 * From this one gets, in closed form:
 *  - psi_s / rho_s: distributions of the normalized hull q-dimension
 *    contributed by one symmetric coset / one asymmetric pair when depths
 *    are drawn uniformly,
 *  - the hull-dimension counting polynomial (coefficient of T^tau = number
 *    of defining multisets whose hull has q-dimension tau), as a product of
 *    one small factor per coset,
 *  - the exact average hull q-dimension and its extremal bounds,
 *  - the set of achievable hull q-dimensions, and
 *  - the set of achievable hull parameter tuples (k_0, ..., k_{s-1}).
 *
 * The tuple enumerator `algorithm1` trades exactness for speed: its
 * bookkeeping for asymmetric pair counters only looks one level back, so for
 * depth s >= 4 its output can disagree with the ground truth produced by
 * `enumerate_hulls_exact`.  The test suite pins its behaviour for s <= 3 and
 * treats the exhaustive enumerator as the oracle.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include <gmpxx.h>

#include "hullcodes/cosetlab.hpp"
#include "hullcodes/grarith.hpp"

namespace hullcodes {

/* ======================================================================== */
/* depth-indicator vectors and the two hull functionals                      */
/* ======================================================================== */

/**
 * The s + 1 depth-indicator vectors: e_b (b < s) marks a coset at depth b,
 * the zero vector a coset at depth s.
 */
inline std::vector<std::vector<int>> es_vectors(int s) {
    if (s < 1) throw std::invalid_argument("es_vectors: s must be >= 1");
    std::vector<std::vector<int>> out(static_cast<std::size_t>(s) + 1,
                                      std::vector<int>(static_cast<std::size_t>(s), 0));
    for (int b = 0; b < s; ++b) out[static_cast<std::size_t>(b)][static_cast<std::size_t>(b)] = 1;
    return out;
}

/**
 * Normalized hull q-dimension contributed by one symmetric coset with
 * depth-indicator x:
 *   sum_{t=0}^{s-1} min{ sum_{a<=t} x_a , 1 - sum_{a<=s-t-1} x_a }.
 * At x = e_b this equals min(b, s - b).
 */
inline i64 triangle_delta(const std::vector<int>& x) {
    const int s = static_cast<int>(x.size());
    i64 total = 0;
    for (int t = 0; t < s; ++t) {
        i64 low = 0, high = 1;
        for (int a = 0; a <= t; ++a) low += x[static_cast<std::size_t>(a)];
        for (int a = 0; a <= s - t - 1; ++a) high -= x[static_cast<std::size_t>(a)];
        total += std::min(low, high);
    }
    return total;
}

/**
 * Normalized hull q-dimension contributed by one asymmetric pair with
 * depth-indicators (y, z).  At (e_b, e_c) this equals
 * min(s - b, c) + min(s - c, b).
 */
inline i64 black_triangle(const std::vector<int>& y, const std::vector<int>& z) {
    if (y.size() != z.size()) throw std::invalid_argument("black_triangle: length mismatch");
    const int s = static_cast<int>(y.size());
    i64 total = 0;
    for (int t = 0; t < s; ++t) {
        i64 ylow = 0, zlow = 0, yhigh = 1, zhigh = 1;
        for (int a = 0; a <= t; ++a) {
            ylow += y[static_cast<std::size_t>(a)];
            zlow += z[static_cast<std::size_t>(a)];
        }
        for (int a = 0; a <= s - t - 1; ++a) {
            yhigh -= y[static_cast<std::size_t>(a)];
            zhigh -= z[static_cast<std::size_t>(a)];
        }
        total += std::min(ylow, zhigh) + std::min(zlow, yhigh);
    }
    return total;
}

/**
 * Step sequence u[t] for one symmetric coset at depth rho (indicator
 * vector e_rho, coordinate s derived as the complement):
 *   u[t] = max{ sum_{a=t+1}^{s} x_a , sum_{a=t+1}^{s} x_{s-a} },
 * returned for t = -1, 0, ..., s-1 (index shifted by one).  The decrement
 * u[t-1] - u[t] is 1 exactly at the coset's hull depth.
 */
inline std::vector<i64> sym_u_sequence(int s, int rho) {
    if (rho < 0 || rho > s) throw std::invalid_argument("sym_u_sequence: depth out of range");
    std::vector<i64> u(static_cast<std::size_t>(s) + 1, 0);
    auto x = [rho](int a) { return a == rho ? 1 : 0; };
    for (int t = -1; t < s; ++t) {
        i64 fwd = 0, rev = 0;
        for (int a = t + 1; a <= s; ++a) {
            fwd += x(a);
            rev += x(s - a);
        }
        u[static_cast<std::size_t>(t + 1)] = std::max(fwd, rev);
    }
    return u;
}

/**
 * Step sequence eps[t] for one asymmetric pair at depths (rho_y, rho_z):
 * eps[t] = v[t] + w[t] with
 *   v[t] = max{ sum_{a=t+1}^{s} y_a , sum_{a=t+1}^{s} z_{s-a} },
 *   w[t] = max{ sum_{a=t+1}^{s} z_a , sum_{a=t+1}^{s} y_{s-a} },
 * returned for t = -1, 0, ..., s-1 (index shifted by one; eps[-1] = 2).
 * The decrement eps[t-1] - eps[t] counts the pair members whose hull depth
 * is exactly t, and is always in {0, 1, 2}.
 */
inline std::vector<i64> pair_epsilon_sequence(int s, int rho_y, int rho_z) {
    if (rho_y < 0 || rho_y > s || rho_z < 0 || rho_z > s)
        throw std::invalid_argument("pair_epsilon_sequence: depth out of range");
    std::vector<i64> eps(static_cast<std::size_t>(s) + 1, 0);
    auto y = [rho_y](int a) { return a == rho_y ? 1 : 0; };
    auto z = [rho_z](int a) { return a == rho_z ? 1 : 0; };
    for (int t = -1; t < s; ++t) {
        i64 yf = 0, zf = 0, yr = 0, zr = 0;
        for (int a = t + 1; a <= s; ++a) {
            yf += y(a);
            zf += z(a);
            yr += y(s - a);
            zr += z(s - a);
        }
        eps[static_cast<std::size_t>(t + 1)] = std::max(yf, zr) + std::max(zf, yr);
    }
    return eps;
}

/* ======================================================================== */
/* psi / rho distributions                                                  */
/* ======================================================================== */

struct DeltaTables {
    int s = 1;
    std::vector<i64> psi;  // psi[eta], eta in [0, s]; total mass s + 1
    std::vector<i64> rho;  // rho[eta], eta in [0, s]; total mass (s + 1)^2
    mpq_class e_delta;     // mean of triangle_delta over one uniform depth
    mpq_class e_black;     // mean of black_triangle over a uniform depth pair
};

/** Enumerate the distributions of the two hull functionals at depth s. */
inline DeltaTables delta_tables(int s) {
    const auto es = es_vectors(s);
    DeltaTables T;
    T.s = s;
    T.psi.assign(static_cast<std::size_t>(s) + 1, 0);
    T.rho.assign(static_cast<std::size_t>(s) + 1, 0);
    mpz_class psi_sum = 0, rho_sum = 0;
    for (const auto& x : es) T.psi[static_cast<std::size_t>(triangle_delta(x))] += 1;
    for (const auto& y : es)
        for (const auto& z : es) T.rho[static_cast<std::size_t>(black_triangle(y, z))] += 1;
    for (int eta = 0; eta <= s; ++eta) {
        psi_sum += eta * T.psi[static_cast<std::size_t>(eta)];
        rho_sum += eta * T.rho[static_cast<std::size_t>(eta)];
    }
    T.e_delta = mpq_class(psi_sum, s + 1);
    T.e_delta.canonicalize();
    T.e_black = mpq_class(rho_sum, mpz_class(s + 1) * (s + 1));
    T.e_black.canonicalize();
    return T;
}

/** Closed form for psi_s: 2 below s/2, 1 at s/2 (s even), 0 above. */
inline i64 psi_closed(int s, i64 eta) {
    if (eta < 0 || eta > s) return 0;
    if (2 * eta < s) return 2;
    if (2 * eta == s) return 1;
    return 0;
}

/** Closed form for rho_s: 2(eta + 1) below s, s + 1 at s. */
inline i64 rho_closed(int s, i64 eta) {
    if (eta < 0 || eta > s) return 0;
    if (eta < s) return 2 * (eta + 1);
    return s + 1;
}

/* ======================================================================== */
/* per-divisor census                                                        */
/* ======================================================================== */

struct DivisorEntry {
    i64 d = 1;      // divisor of n
    i64 ord = 1;    // ord_d(q) = size of every coset with this divisor
    i64 gamma = 0;  // number of symmetric cosets
    i64 beta = 0;   // number of asymmetric coset pairs
};

inline std::vector<DivisorEntry> divisor_classes(i64 n, i64 q) {
    if (n < 1 || q < 2) throw std::invalid_argument("divisor_classes: need n >= 1 and q >= 2");
    if (std::gcd(n, q) != 1)
        throw std::invalid_argument("divisor_classes: n and q must be coprime");
    std::vector<DivisorEntry> out;
    for (i64 d : divisors(n)) {
        DivisorEntry e;
        e.d = d;
        e.ord = mult_order(q, d);
        e.gamma = gamma_count(d, q);
        e.beta = beta_count(d, q);
        out.push_back(e);
    }
    return out;
}

/* ======================================================================== */
/* hull-dimension counting polynomial                                        */
/* ======================================================================== */

/**
 * Coefficient vector of the hull-dimension counting polynomial: entry tau is
 * the number of defining multisets mod n whose Euclidean hull has
 * q-dimension tau.  One factor sum_eta psi_s(eta) T^{ord * eta} per
 * symmetric coset, one factor sum_eta rho_s(eta) T^{ord * eta} per
 * asymmetric pair.
 */
inline std::vector<mpz_class> count_hulls(i64 n, i64 q, int s) {
    if (s < 1) throw std::invalid_argument("count_hulls: s must be >= 1");
    const DeltaTables T = delta_tables(s);
    std::vector<mpz_class> poly{1};
    auto apply = [&poly](i64 ord, const std::vector<i64>& dist, i64 times) {
        for (i64 rep = 0; rep < times; ++rep) {
            std::vector<mpz_class> next(
                poly.size() + static_cast<std::size_t>(ord) * (dist.size() - 1), 0);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                if (poly[i] == 0) continue;
                for (std::size_t eta = 0; eta < dist.size(); ++eta) {
                    if (dist[eta] == 0) continue;
                    next[i + static_cast<std::size_t>(ord) * eta] += poly[i] * dist[eta];
                }
            }
            while (next.size() > 1 && next.back() == 0) next.pop_back();
            poly = std::move(next);
        }
    };
    for (const DivisorEntry& e : divisor_classes(n, q)) {
        if (e.gamma > 0) apply(e.ord, T.psi, e.gamma);
        if (e.beta > 0) apply(e.ord, T.rho, e.beta);
    }
    return poly;
}

/* ======================================================================== */
/* averages and bounds                                                       */
/* ======================================================================== */

/** The constant c_s in the average formula. */
inline mpq_class average_constant(int s) {
    mpq_class c = (s % 2 == 0)
                      ? mpq_class(static_cast<long>(s) * (s + 2), 12L * (s + 1))
                      : mpq_class(static_cast<long>(s) * s + 2L * s + 3, 12L * (s + 1));
    c.canonicalize();
    return c;
}

/**
 * Exact average Euclidean hull q-dimension over all defining multisets:
 * n s (2s + 1) / (6 (s + 1)) - c_s B(n; q).
 */
inline mpq_class average_hull_qdim(i64 n, i64 q, int s) {
    mpq_class lead(mpz_class(n) * s * (2 * s + 1), mpz_class(6) * (s + 1));
    lead.canonicalize();
    mpq_class out = lead - average_constant(s) * B_count(n, q);
    out.canonicalize();
    return out;
}

/** Average when every coset is symmetric (n in N_q): s^2 n/(4(s+1)) resp. n(s-1)/4. */
inline mpq_class average_all_symmetric(i64 n, int s) {
    mpq_class v = (s % 2 == 0) ? mpq_class(mpz_class(n) * s * s, 4L * (s + 1))
                               : mpq_class(mpz_class(n) * (s - 1), 4);
    v.canonicalize();
    return v;
}

/** Lower bound on the average for n outside N_q. */
inline mpq_class average_bound_lower(i64 n, int s) {
    mpq_class v = (s % 2 == 0)
                      ? mpq_class(mpz_class(5 * s + 1) * s * n, 18L * (s + 1))
                      : mpq_class(mpz_class(n) * (5L * s * s + s - 3), 18L * (s + 1));
    v.canonicalize();
    return v;
}

/** Upper bound on the average for n outside N_q. */
inline mpq_class average_bound_upper(i64 n, int s) {
    mpq_class v =
        (s % 2 == 0)
            ? mpq_class(mpz_class(2) * n * (2 * s + 1) * s - mpz_class(s + 2) * s,
                        12L * (s + 1))
            : mpq_class(mpz_class(2) * n * s * (2 * s + 1) - (mpz_class(s) * s + 2 * s + 3),
                        12L * (s + 1));
    v.canonicalize();
    return v;
}

/* ======================================================================== */
/* achievable hull q-dimensions                                              */
/* ======================================================================== */

/**
 * The set of achievable Euclidean hull q-dimensions: subset sums
 * sum_i ord_i a_i + sum_j ord_j b_j with a_i in [0, gamma_i floor(s/2)] per
 * symmetric divisor and b_j in [0, beta_j s] per asymmetric divisor.
 */
inline std::set<i64> aleph_set(i64 n, i64 q, int s) {
    if (s < 1) throw std::invalid_argument("aleph_set: s must be >= 1");
    const auto classes = divisor_classes(n, q);
    i64 cap = 0;
    for (const DivisorEntry& e : classes)
        cap += e.ord * (e.gamma * (s / 2) + e.beta * static_cast<i64>(s));
    std::vector<char> seen(static_cast<std::size_t>(cap) + 1, 0);
    seen[0] = 1;
    auto extend = [&seen](i64 ord, i64 amax) {
        if (amax <= 0) return;
        std::vector<char> next(seen.size(), 0);
        for (std::size_t v = 0; v < seen.size(); ++v) {
            if (!seen[v]) continue;
            for (i64 a = 0; a <= amax; ++a) {
                const std::size_t w = v + static_cast<std::size_t>(a * ord);
                if (w >= next.size()) break;
                next[w] = 1;
            }
        }
        seen = std::move(next);
    };
    for (const DivisorEntry& e : classes) {
        extend(e.ord, e.gamma * (s / 2));
        extend(e.ord, e.beta * static_cast<i64>(s));
    }
    std::set<i64> out;
    for (std::size_t v = 0; v < seen.size(); ++v)
        if (seen[v]) out.insert(static_cast<i64>(v));
    return out;
}

/* ======================================================================== */
/* hull parameter tuples: closed-form enumerator                             */
/* ======================================================================== */

/**
 * Enumerate hull parameter tuples (k_0, ..., k_{s-1}) reachable by Euclidean
 * hulls of cyclic serial codes of length n.
 *
 * When every coset is symmetric: k_t = 0 below ceil(s/2); at each
 * t >= ceil(s/2) independently, k_t = sum_i ord_i mu_i with
 * 0 <= mu_i <= gamma_i; keep tuples with sum_t k_t <= n.
 *
 * Otherwise: at t = 0 each asymmetric divisor contributes ord_j nu_j with
 * nu_j <= beta_j; for 0 < t < ceil(s/2) the counter is bounded by
 * beta_j - nu_j(t-1); from t = ceil(s/2) on, symmetric divisors add
 * ord_i mu_i with mu_i <= gamma_i and the pair bound doubles to
 * 2 (beta_j - nu_j(t-1)) (an empty range when negative); every level t >= 1
 * must satisfy 2 k_0 + k_1 + ... + k_t <= n.
 *
 * Throws BudgetError when the search exceeds `budget` visited nodes.
 */
inline std::set<std::vector<i64>> algorithm1(i64 n, i64 q, int s,
                                             std::uint64_t budget = 50'000'000) {
    if (s < 1) throw std::invalid_argument("algorithm1: s must be >= 1");
    const auto classes = divisor_classes(n, q);
    std::vector<DivisorEntry> syms, pairs;
    for (const DivisorEntry& e : classes) {
        if (e.gamma > 0) syms.push_back(e);
        if (e.beta > 0) pairs.push_back(e);
    }
    const int half = (s + 1) / 2;  // ceil(s/2)
    std::uint64_t nodes = 0;
    auto charge = [&nodes, budget]() {
        if (++nodes > budget) throw BudgetError("algorithm1: node budget exceeded");
    };
    std::set<std::vector<i64>> out;

    if (pairs.empty()) {
        // All cosets symmetric: the same value set at every active level.
        std::set<i64> level{0};
        for (const DivisorEntry& e : syms) {
            std::set<i64> next;
            for (i64 v : level) {
                for (i64 mu = 0; mu <= e.gamma; ++mu) {
                    charge();
                    next.insert(v + mu * e.ord);
                }
            }
            level = std::move(next);
        }
        const std::vector<i64> values(level.begin(), level.end());
        const std::size_t m = static_cast<std::size_t>(s - half);
        std::vector<std::size_t> pick(m, 0);
        while (true) {
            charge();
            i64 total = 0;
            std::vector<i64> k(static_cast<std::size_t>(s), 0);
            for (std::size_t i = 0; i < m; ++i) {
                k[static_cast<std::size_t>(half) + i] = values[pick[i]];
                total += values[pick[i]];
            }
            if (total <= n) out.insert(std::move(k));
            std::size_t pos = 0;
            while (pos < m && ++pick[pos] == values.size()) pick[pos++] = 0;
            if (pos == m) break;
        }
        return out;
    }

    // Mixed census: level-by-level search carrying the previous pair counters.
    std::vector<i64> k(static_cast<std::size_t>(s), 0);
    auto rec = [&](auto&& self, int t, const std::vector<i64>& nu_prev) -> void {
        if (t == s) {
            out.insert(k);
            return;
        }
        const bool with_sym = t >= half;
        std::vector<i64> bound(pairs.size());
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            if (t == 0)
                bound[j] = pairs[j].beta;
            else if (t < half)
                bound[j] = pairs[j].beta - nu_prev[j];
            else
                bound[j] = 2 * (pairs[j].beta - nu_prev[j]);
            if (bound[j] < 0) return;  // empty range: prune this branch
        }
        std::vector<i64> nu(pairs.size(), 0);
        std::vector<i64> mu(with_sym ? syms.size() : 0, 0);
        while (true) {
            charge();
            i64 kt = 0;
            for (std::size_t j = 0; j < pairs.size(); ++j) kt += pairs[j].ord * nu[j];
            for (std::size_t i = 0; i < mu.size(); ++i) kt += syms[i].ord * mu[i];
            k[static_cast<std::size_t>(t)] = kt;
            bool ok = true;
            if (t >= 1) {
                i64 acc = 2 * k[0];
                for (int u = 1; u <= t; ++u) acc += k[static_cast<std::size_t>(u)];
                ok = acc <= n;
            }
            if (ok) self(self, t + 1, nu);
            // Advance the mixed-radix odometer over (nu, mu).
            std::size_t pos = 0;
            while (pos < nu.size() && ++nu[pos] > bound[pos]) nu[pos++] = 0;
            if (pos == nu.size()) {
                std::size_t ms = 0;
                while (ms < mu.size() &&
                       ++mu[ms] > syms[ms].gamma)
                    mu[ms++] = 0;
                if (ms == mu.size()) break;
            }
        }
        k[static_cast<std::size_t>(t)] = 0;
    };
    rec(rec, 0, std::vector<i64>(pairs.size(), 0));
    return out;
}

/* ======================================================================== */
/* exhaustive enumeration over depth profiles                                */
/* ======================================================================== */

/** Hull parameter tuple of one depth profile (atlas coset order). */
inline std::vector<i64> hull_params_of_depths(const CosetAtlas& atlas, int s,
                                              const std::vector<int>& rho) {
    if (rho.size() != atlas.cosets.size())
        throw std::invalid_argument("hull_params_of_depths: profile length mismatch");
    std::vector<i64> k(static_cast<std::size_t>(s), 0);
    auto deposit = [&k, s](int depth, i64 ord) {
        if (depth < s) k[static_cast<std::size_t>(depth)] += ord;
    };
    for (std::size_t i : atlas.symmetric_idx) {
        const int d = rho[i];
        deposit(std::max(d, s - d), atlas.cosets[i].size());
    }
    for (const auto& [y, z] : atlas.asym_pairs) {
        const int dy = rho[y], dz = rho[z];
        deposit(std::max(dy, s - dz), atlas.cosets[y].size());
        deposit(std::max(dz, s - dy), atlas.cosets[z].size());
    }
    return k;
}

struct HullEnumeration {
    std::set<std::vector<i64>> tuples;                     // achievable parameter tuples
    std::map<std::vector<i64>, std::uint64_t> tuple_tally;  // multiplicity per tuple
    std::map<i64, std::uint64_t> qdim_tally;               // multiplicity per hull q-dim
    std::uint64_t total = 0;                               // (s + 1)^omega
};

/**
 * Walk all (s + 1)^omega depth profiles and tabulate the Euclidean hull
 * parameters.  Throws BudgetError when the state count exceeds `budget`.
 * With jobs > 1 the flat profile index space is cut into contiguous chunks
 * enumerated independently and the tallies merged at the end.
 */
inline HullEnumeration enumerate_hulls_exact(i64 n, i64 q, int s,
                                             std::uint64_t budget = 10'000'000,
                                             int jobs = 1) {
    if (s < 1) throw std::invalid_argument("enumerate_hulls_exact: s must be >= 1");
    if (jobs < 1) throw std::invalid_argument("enumerate_hulls_exact: jobs must be >= 1");
    const CosetAtlas atlas = build_atlas(n, q);
    const std::size_t omega = atlas.cosets.size();
    u128 states = 1;
    for (std::size_t i = 0; i < omega; ++i) {
        states *= static_cast<u128>(s + 1);
        if (states > static_cast<u128>(budget))
            throw BudgetError("enumerate_hulls_exact: (s+1)^omega exceeds the state budget");
    }
    const std::uint64_t total = static_cast<std::uint64_t>(states);

    auto scan = [&atlas, s, omega](std::uint64_t lo, std::uint64_t hi) {
        HullEnumeration part;
        std::vector<int> rho(omega, 0);
        std::uint64_t rem = lo;
        for (std::size_t i = 0; i < omega; ++i) {
            rho[i] = static_cast<int>(rem % static_cast<std::uint64_t>(s + 1));
            rem /= static_cast<std::uint64_t>(s + 1);
        }
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            const std::vector<i64> k = hull_params_of_depths(atlas, s, rho);
            i64 qdim = 0;
            for (int t = 0; t < s; ++t)
                qdim += static_cast<i64>(s - t) * k[static_cast<std::size_t>(t)];
            part.tuples.insert(k);
            part.tuple_tally[k] += 1;
            part.qdim_tally[qdim] += 1;
            part.total += 1;
            std::size_t pos = 0;
            while (pos < omega && ++rho[pos] > s) rho[pos++] = 0;
        }
        return part;
    };

    std::vector<HullEnumeration> parts;
    const int workers = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), std::max<std::uint64_t>(total, 1)));
    if (workers <= 1) {
        parts.push_back(scan(0, total));
    } else {
        parts.resize(static_cast<std::size_t>(workers));
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t lo = total / workers * static_cast<std::uint64_t>(w) +
                                     std::min<std::uint64_t>(total % workers, w);
            std::uint64_t hi = total / workers * static_cast<std::uint64_t>(w + 1) +
                               std::min<std::uint64_t>(total % workers, w + 1);
            pool.emplace_back([&parts, &scan, w, lo, hi]() {
                parts[static_cast<std::size_t>(w)] = scan(lo, hi);
            });
        }
        for (auto& th : pool) th.join();
    }

    HullEnumeration result;
    for (HullEnumeration& part : parts) {
        result.tuples.insert(part.tuples.begin(), part.tuples.end());
        for (const auto& [k, c] : part.tuple_tally) result.tuple_tally[k] += c;
        for (const auto& [d, c] : part.qdim_tally) result.qdim_tally[d] += c;
        result.total += part.total;
    }
    return result;
}

/** Mean hull q-dimension of an exhaustive enumeration, as an exact rational. */
inline mpq_class enumeration_mean(const HullEnumeration& E) {
    mpz_class acc = 0;
    for (const auto& [qdim, count] : E.qdim_tally)
        acc += mpz_class(static_cast<long>(qdim)) * mpz_class(static_cast<unsigned long>(count));
    mpq_class mean(acc, mpz_class(static_cast<unsigned long>(E.total)));
    mean.canonicalize();
    return mean;
}

}  // namespace hullcodes
