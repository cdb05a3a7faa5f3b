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
 * @file cosetlab.hpp
 * @brief Cyclotomic coset combinatorics modulo n relative to a prime power q.
 *
 * Everything in this header is plain integer arithmetic: multiplicative
 * orders, Euler's totient, the family N_q = { d >= 1 : d | q^i + 1 for some
 * i >= 1 }, the coset census (symmetric cosets, asymmetric coset pairs), and
 * the derived counts
 *
 *   gamma(j; q) = phi(j) / ord_j(q)        if j in N_q, else 0,
 *   beta(j; q)  = phi(j) / (2 ord_j(q))    if j not in N_q, else 0,
 *   omega(n; q) = sum_{j | n} gamma(j; q)  +  2 * sum_{j | n} beta(j; q),
 *   B(n; q)     = sum_{j | n, j in N_q} phi(j),
 *
 * where omega(n; q) equals the total number of q-cyclotomic cosets modulo n
 * and B(n; q) the number of residues lying in symmetric cosets.
 *
 * All functions require gcd(n, q) = 1 where a modulus is involved and throw
 * std::invalid_argument otherwise.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hullcodes {

using i64 = std::int64_t;

/** Thrown when a requested computation exceeds its enumeration budget. */
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* ------------------------------------------------------------------------ */
/* modular integer helpers                                                   */
/* ------------------------------------------------------------------------ */

/** Nonnegative remainder of x modulo m (m >= 1). */
inline i64 mod_floor(i64 x, i64 m) {
    if (m <= 0) throw std::invalid_argument("mod_floor: modulus must be positive");
    i64 r = x % m;
    return r < 0 ? r + m : r;
}

/** (x * y) mod m without overflow for |m| < 2^62. */
inline i64 mul_mod(i64 x, i64 y, i64 m) {
    return static_cast<i64>(static_cast<__int128>(x) * y % m);
}

/** (base ^ exp) mod m for exp >= 0, m >= 1. */
inline i64 pow_mod(i64 base, i64 exp, i64 m) {
    if (exp < 0) throw std::invalid_argument("pow_mod: negative exponent");
    if (m <= 0) throw std::invalid_argument("pow_mod: modulus must be positive");
    i64 acc = 1 % m;
    i64 b = mod_floor(base, m);
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, b, m);
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    return acc;
}

/** Multiplicative order of x modulo m; requires gcd(x, m) = 1. */
inline i64 mult_order(i64 x, i64 m) {
    if (m <= 0) throw std::invalid_argument("mult_order: modulus must be positive");
    x = mod_floor(x, m);
    if (std::gcd(x, m) != 1)
        throw std::invalid_argument("mult_order: arguments are not coprime");
    i64 acc = 1 % m;
    for (i64 k = 1; k <= m; ++k) {
        acc = mul_mod(acc, x, m);
        if (acc == 1 % m) return k;
    }
    throw std::logic_error("mult_order: order not found");  // unreachable
}

/* ------------------------------------------------------------------------ */
/* elementary multiplicative number theory                                   */
/* ------------------------------------------------------------------------ */

/** Distinct prime factors of n >= 1, ascending. */
inline std::vector<i64> prime_factors(i64 n) {
    if (n < 1) throw std::invalid_argument("prime_factors: n must be >= 1");
    std::vector<i64> ps;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

/** True iff n is prime. */
inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/** All positive divisors of n >= 1, ascending. */
inline std::vector<i64> divisors(i64 n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<i64> ds;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

/** Euler's totient phi(n). */
inline i64 euler_phi(i64 n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
    i64 result = n;
    for (i64 p : prime_factors(n)) result = result / p * (p - 1);
    return result;
}

/* ------------------------------------------------------------------------ */
/* the family N_q                                                            */
/* ------------------------------------------------------------------------ */

/**
 * True iff d divides q^i + 1 for some i >= 1 (with gcd(d, q) = 1 required).
 *
 * Since q^i mod d is periodic with period ord_d(q), it suffices to scan
 * i = 1 .. ord_d(q) for q^i = -1 (mod d).  d = 1 and d = 2 are members
 * (everything, resp. q + 1 when q is odd; for d in {1, 2} the congruence
 * -1 = q^i holds trivially as -1 = 1 mod 1 and q odd mod 2).
 */
inline bool in_Nq(i64 d, i64 q) {
    if (d < 1) throw std::invalid_argument("in_Nq: d must be >= 1");
    if (q < 2) throw std::invalid_argument("in_Nq: q must be >= 2");
    if (std::gcd(d, q) != 1)
        throw std::invalid_argument("in_Nq: d and q are not coprime");
    const i64 target = mod_floor(-1, d);
    const i64 ord = mult_order(q, d);
    i64 acc = 1 % d;
    for (i64 i = 1; i <= ord; ++i) {
        acc = mul_mod(acc, mod_floor(q, d), d);
        if (acc == target) return true;
    }
    return false;
}

/** gamma(j; q) = phi(j)/ord_j(q) when j in N_q, else 0. */
inline i64 gamma_count(i64 j, i64 q) {
    if (!in_Nq(j, q)) return 0;
    return euler_phi(j) / mult_order(q, j);
}

/** beta(j; q) = phi(j)/(2 ord_j(q)) when j not in N_q, else 0. */
inline i64 beta_count(i64 j, i64 q) {
    if (in_Nq(j, q)) return 0;
    const i64 phi = euler_phi(j);
    const i64 ord = mult_order(q, j);
    return phi / (2 * ord);
}

/** Total number of q-cyclotomic cosets modulo n: sum of gamma + 2 beta over divisors. */
inline i64 omega_count(i64 n, i64 q) {
    i64 total = 0;
    for (i64 j : divisors(n)) total += gamma_count(j, q) + 2 * beta_count(j, q);
    return total;
}

/** Number of symmetric cosets modulo n (gamma part of the census). */
inline i64 gamma_total(i64 n, i64 q) {
    i64 total = 0;
    for (i64 j : divisors(n)) total += gamma_count(j, q);
    return total;
}

/** Number of asymmetric coset *pairs* modulo n (beta part of the census). */
inline i64 beta_total(i64 n, i64 q) {
    i64 total = 0;
    for (i64 j : divisors(n)) total += beta_count(j, q);
    return total;
}

/** B(n; q) = sum of phi(j) over divisors j of n with j in N_q. */
inline i64 B_count(i64 n, i64 q) {
    i64 total = 0;
    for (i64 j : divisors(n)) {
        if (in_Nq(j, q)) total += euler_phi(j);
    }
    return total;
}

/* ------------------------------------------------------------------------ */
/* cyclotomic cosets                                                         */
/* ------------------------------------------------------------------------ */

/**
 * One q-cyclotomic coset modulo n.
 *
 * elems    sorted members of { z q^i mod n : i >= 0 }
 * rep      smallest member
 * divisor  j = n / gcd(n, z), the order of z in Z/n (invariant across the coset)
 * symmetric  true iff the coset equals its own negation -C mod n
 */
struct Coset {
    i64 rep = 0;
    std::vector<i64> elems;
    i64 divisor = 1;
    bool symmetric = true;

    i64 size() const { return static_cast<i64>(elems.size()); }
};

/** The q-cyclotomic coset of z modulo n (gcd(n, q) = 1 required). */
inline Coset coset_of(i64 z, i64 n, i64 q) {
    if (n < 1) throw std::invalid_argument("coset_of: n must be >= 1");
    if (std::gcd(n, q) != 1)
        throw std::invalid_argument("coset_of: n and q are not coprime");
    z = mod_floor(z, n);
    Coset c;
    i64 w = z;
    do {
        c.elems.push_back(w);
        w = mul_mod(w, mod_floor(q, n), n);
    } while (w != z);
    std::sort(c.elems.begin(), c.elems.end());
    c.rep = c.elems.front();
    c.divisor = n / std::gcd(n, z);
    std::vector<i64> neg;
    neg.reserve(c.elems.size());
    for (i64 e : c.elems) neg.push_back(mod_floor(-e, n));
    std::sort(neg.begin(), neg.end());
    c.symmetric = (neg == c.elems);
    return c;
}

/**
 * The full census of q-cyclotomic cosets modulo n.
 *
 * cosets          every coset, sorted by representative
 * owner           owner[z] = index into cosets of the coset containing z
 * symmetric_idx   indices of symmetric cosets, sorted by (divisor, rep)
 * asym_pairs      (F, -F) index pairs with rep(F) < rep(-F), sorted by
 *                 (divisor, rep of F); each asymmetric coset appears in
 *                 exactly one pair
 */
struct CosetAtlas {
    i64 n = 1;
    i64 q = 2;
    std::vector<Coset> cosets;
    std::vector<i64> owner;
    std::vector<std::size_t> symmetric_idx;
    std::vector<std::pair<std::size_t, std::size_t>> asym_pairs;
};

inline CosetAtlas build_atlas(i64 n, i64 q) {
    if (n < 1) throw std::invalid_argument("build_atlas: n must be >= 1");
    if (q < 2) throw std::invalid_argument("build_atlas: q must be >= 2");
    if (std::gcd(n, q) != 1)
        throw std::invalid_argument("build_atlas: n and q are not coprime");
    CosetAtlas atlas;
    atlas.n = n;
    atlas.q = q;
    atlas.owner.assign(static_cast<std::size_t>(n), -1);
    for (i64 z = 0; z < n; ++z) {
        if (atlas.owner[static_cast<std::size_t>(z)] >= 0) continue;
        Coset c = coset_of(z, n, q);
        const i64 idx = static_cast<i64>(atlas.cosets.size());
        for (i64 e : c.elems) atlas.owner[static_cast<std::size_t>(e)] = idx;
        atlas.cosets.push_back(std::move(c));
    }
    // cosets arrive sorted by rep since z scans upward and reps are minima.
    auto order_key = [&](std::size_t i) {
        return std::make_pair(atlas.cosets[i].divisor, atlas.cosets[i].rep);
    };
    std::vector<std::size_t> by_key;
    for (std::size_t i = 0; i < atlas.cosets.size(); ++i) by_key.push_back(i);
    std::sort(by_key.begin(), by_key.end(),
              [&](std::size_t a, std::size_t b) { return order_key(a) < order_key(b); });
    for (std::size_t i : by_key) {
        const Coset& c = atlas.cosets[i];
        if (c.symmetric) {
            atlas.symmetric_idx.push_back(i);
        } else {
            const std::size_t mate =
                static_cast<std::size_t>(atlas.owner[static_cast<std::size_t>(mod_floor(-c.rep, n))]);
            if (atlas.cosets[mate].rep > c.rep) atlas.asym_pairs.emplace_back(i, mate);
        }
    }
    return atlas;
}

/** Index (into atlas.cosets) of the coset containing z. */
inline std::size_t coset_index_of(const CosetAtlas& atlas, i64 z) {
    return static_cast<std::size_t>(atlas.owner[static_cast<std::size_t>(mod_floor(z, atlas.n))]);
}

}  // namespace hullcodes
