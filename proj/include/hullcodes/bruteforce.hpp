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
 * @file bruteforce.hpp
 * @brief Exhaustive oracles over tiny ambient spaces R^n: explicit codeword
 *        sets, duals by scanning all vectors for orthogonality, hulls by set
 *        intersection, and parameter profiles by torsion-dimension counting.
 *
 * Nothing here reuses the closed-form dual/hull route: duals are found by
 * testing <u, c>_ell = 0 against every codeword, so agreement with the
 * analytic path is meaningful evidence rather than a tautology.
 *
 * Vectors in R^n are packed into 64-bit indices by mixed-radix counting:
 * coordinate 0 is the fastest digit and each coordinate contributes its
 * element index (p-adic digits of the flat coefficient vector).  Scans walk
 * the packed indices in increasing order, so iteration is deterministic and
 * the smallest member of a set difference is a canonical witness.
 *
 * Budgets: the ambient space |R|^n (and the codeword count q^{qdim}) must
 * stay at or below the context budget, default 2^24.  Ring operations are
 * memoized in flat lookup tables, so |R| itself is capped at 2^11.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "hullcodes/cosetlab.hpp"
#include "hullcodes/ringpoly.hpp"
#include "hullcodes/serialcodes.hpp"

namespace hullcodes {

/** A set of vectors in R^n, as sorted, deduplicated packed indices. */
using VectorSet = std::vector<std::uint64_t>;

/* ======================================================================== */
/* context: op tables and packing                                           */
/* ======================================================================== */

/**
 * Precomputed arithmetic for one (ring, length) pair.  All unary and binary
 * element operations become table lookups on element indices.
 */
struct BruteContext {
    ChainRingCtx ring;
    i64 n = 1;
    i64 rsize = 2;                       // |R|
    std::uint64_t space = 2;             // |R|^n
    std::uint64_t budget = 1ULL << 24;
    std::vector<std::uint64_t> pow;      // rsize^j, j = 0..n
    std::vector<std::uint16_t> add_tab;  // rsize * rsize
    std::vector<std::uint16_t> mul_tab;  // rsize * rsize
    std::vector<std::uint16_t> neg_tab;  // rsize
    std::vector<std::uint16_t> sigma_tab;  // rsize, one Frobenius step
    std::vector<std::uint8_t> val_tab;   // theta-valuation, val(0) = s
};

inline BruteContext make_brute_context(const ChainRingCtx& ring, i64 n,
                                       std::uint64_t budget = 1ULL << 24) {
    if (n < 1) throw std::invalid_argument("make_brute_context: n must be >= 1");
    if (budget > (1ULL << 40))
        throw std::invalid_argument("make_brute_context: budget above 2^40 not supported");
    BruteContext ctx;
    ctx.ring = ring;
    ctx.n = n;
    ctx.rsize = ring.size;
    ctx.budget = budget;
    if (ctx.rsize > (1 << 11))
        throw BudgetError("make_brute_context: |R| exceeds table cap 2^11");
    u128 space = 1;
    for (i64 j = 0; j < n; ++j) {
        space *= static_cast<u128>(ctx.rsize);
        if (space > static_cast<u128>(budget))
            throw BudgetError("make_brute_context: |R|^n exceeds budget");
    }
    ctx.space = static_cast<std::uint64_t>(space);
    ctx.pow.resize(static_cast<std::size_t>(n) + 1);
    ctx.pow[0] = 1;
    for (i64 j = 0; j < n; ++j)
        ctx.pow[static_cast<std::size_t>(j) + 1] =
            ctx.pow[static_cast<std::size_t>(j)] * static_cast<std::uint64_t>(ctx.rsize);

    const auto sz = static_cast<std::size_t>(ctx.rsize);
    std::vector<RElem> elems(sz);
    for (i64 i = 0; i < ctx.rsize; ++i)
        elems[static_cast<std::size_t>(i)] = r_from_index(ring, i);
    ctx.add_tab.resize(sz * sz);
    ctx.mul_tab.resize(sz * sz);
    ctx.neg_tab.resize(sz);
    ctx.sigma_tab.resize(sz);
    ctx.val_tab.resize(sz);
    for (std::size_t i = 0; i < sz; ++i) {
        ctx.neg_tab[i] = static_cast<std::uint16_t>(r_index(ring, r_neg(ring, elems[i])));
        ctx.sigma_tab[i] = static_cast<std::uint16_t>(r_index(ring, r_sigma(ring, elems[i])));
        ctx.val_tab[i] = static_cast<std::uint8_t>(r_valuation(ring, elems[i]));
        for (std::size_t j = 0; j < sz; ++j) {
            ctx.add_tab[i * sz + j] =
                static_cast<std::uint16_t>(r_index(ring, r_add(ring, elems[i], elems[j])));
            ctx.mul_tab[i * sz + j] =
                static_cast<std::uint16_t>(r_index(ring, r_mul(ring, elems[i], elems[j])));
        }
    }
    return ctx;
}

inline std::uint64_t pack_vector(const BruteContext& ctx, const RVec& v) {
    if (static_cast<i64>(v.size()) != ctx.n)
        throw std::invalid_argument("pack_vector: length mismatch");
    std::uint64_t idx = 0;
    for (i64 j = 0; j < ctx.n; ++j)
        idx += static_cast<std::uint64_t>(r_index(ctx.ring, v[static_cast<std::size_t>(j)])) *
               ctx.pow[static_cast<std::size_t>(j)];
    return idx;
}

inline RVec unpack_vector(const BruteContext& ctx, std::uint64_t idx) {
    RVec v(static_cast<std::size_t>(ctx.n));
    for (i64 j = 0; j < ctx.n; ++j) {
        v[static_cast<std::size_t>(j)] =
            r_from_index(ctx.ring, static_cast<i64>(idx % static_cast<std::uint64_t>(ctx.rsize)));
        idx /= static_cast<std::uint64_t>(ctx.rsize);
    }
    return v;
}

/** Element-index digits of a packed vector, coordinate 0 first. */
inline void unpack_digits(const BruteContext& ctx, std::uint64_t idx,
                          std::vector<std::uint16_t>& out) {
    out.resize(static_cast<std::size_t>(ctx.n));
    for (i64 j = 0; j < ctx.n; ++j) {
        out[static_cast<std::size_t>(j)] =
            static_cast<std::uint16_t>(idx % static_cast<std::uint64_t>(ctx.rsize));
        idx /= static_cast<std::uint64_t>(ctx.rsize);
    }
}

/* ======================================================================== */
/* codeword enumeration                                                     */
/* ======================================================================== */

/**
 * All R-linear combinations of the given rows, deduplicated.
 *
 * A row of theta-valuation t spans { c row : c in R } with c ranging over
 * R / theta^{s-t}, and every such c has a unique expansion
 * sum_{m < s-t, i < r} d_{m,i} theta^m x^i with p-ary digits d.  The rows'
 * combined expansions are therefore walked by a p-ary odometer over the
 * r * sum_rows (s - t_row) digit positions, visiting each combination once;
 * vector updates are incremental (one generator addition per digit change).
 */
inline VectorSet enumerate_codewords(const BruteContext& ctx, const std::vector<RVec>& rows) {
    const ChainRingCtx& R = ctx.ring;
    const i64 p = R.spec.p;
    const int s = R.spec.s;
    const auto rs = static_cast<std::uint64_t>(ctx.rsize);

    // F_p generators as sparse (coordinate, element-index) support lists.
    struct Gen {
        std::vector<std::pair<i64, std::uint16_t>> step;    // += gen
        std::vector<std::pair<i64, std::uint16_t>> unwind;  // += -(p-1) gen
    };
    std::vector<Gen> gens;
    u128 count = 1;
    for (const RVec& row : rows) {
        int t = s;
        for (const RElem& c : row) t = std::min(t, r_valuation(R, c));
        for (int m = 0; m + t < s; ++m) {
            for (int i = 0; i < R.spec.r; ++i) {
                RElem xi = r_zero(R);
                xi[static_cast<std::size_t>(i)] = 1;
                Gen g;
                for (i64 j = 0; j < ctx.n; ++j) {
                    const RElem c = r_theta_mul(
                        R, r_mul(R, xi, row[static_cast<std::size_t>(j)]), m);
                    if (r_is_zero(R, c)) continue;
                    const auto ci = static_cast<std::uint16_t>(r_index(R, c));
                    g.step.emplace_back(j, ci);
                    RElem back = c;
                    for (i64 rep = 1; rep + 1 < p; ++rep) back = r_add(R, back, c);
                    g.unwind.emplace_back(
                        j, static_cast<std::uint16_t>(r_index(R, r_neg(R, back))));
                }
                gens.push_back(std::move(g));
                count *= static_cast<u128>(p);
                if (count > static_cast<u128>(ctx.budget))
                    throw BudgetError("enumerate_codewords: q^qdim exceeds budget");
            }
        }
    }

    std::vector<std::uint16_t> cur(static_cast<std::size_t>(ctx.n), 0);
    std::uint64_t packed = 0;
    const auto apply = [&](const std::vector<std::pair<i64, std::uint16_t>>& delta) {
        for (const auto& [j, di] : delta) {
            const auto old = cur[static_cast<std::size_t>(j)];
            const auto neu = ctx.add_tab[old * rs + di];
            cur[static_cast<std::size_t>(j)] = neu;
            packed += (static_cast<std::uint64_t>(neu) - static_cast<std::uint64_t>(old)) *
                      ctx.pow[static_cast<std::size_t>(j)];
        }
    };

    VectorSet out;
    out.reserve(static_cast<std::size_t>(count));
    out.push_back(0);
    std::vector<i64> digit(gens.size(), 0);
    for (u128 step = 1; step < count; ++step) {
        std::size_t k = 0;
        while (digit[k] == p - 1) {
            digit[k] = 0;
            apply(gens[k].unwind);
            ++k;
        }
        ++digit[k];
        apply(gens[k].step);
        out.push_back(packed);
    }
    std::sort(out.begin(), out.end());
    const auto last = std::unique(out.begin(), out.end());
    if (last != out.end())
        throw std::logic_error("enumerate_codewords: duplicate combination (arithmetic bug)");
    return out;
}

inline VectorSet enumerate_codewords(const BruteContext& ctx, const CyclicSerialCode& C) {
    return enumerate_codewords(ctx, generator_rows(C));
}

/* ======================================================================== */
/* exhaustive duals, intersections, witnesses                               */
/* ======================================================================== */

/**
 * The ell-Galois dual of the span of S, by scanning every vector of R^n and
 * keeping those orthogonal to all members of S.  The cardinality identity
 * |S| * |dual| = |R|^n is checked and a violation (impossible for a
 * submodule S) reported as a logic error.  Workers split the scan by the
 * leading coordinate into contiguous packed ranges, so the merged result
 * stays sorted.
 */
inline VectorSet brute_dual(const BruteContext& ctx, const VectorSet& S, i64 ell, int jobs = 1) {
    const auto rs = static_cast<std::uint64_t>(ctx.rsize);
    const auto n = static_cast<std::size_t>(ctx.n);
    i64 ellr = ell % ctx.ring.spec.r;
    if (ellr < 0) ellr += ctx.ring.spec.r;

    // Pre-apply sigma^ell to every member's digits once.
    std::vector<std::uint16_t> twisted;
    twisted.reserve(S.size() * n);
    std::size_t zero_at = S.size();
    {
        std::vector<std::uint16_t> digs;
        for (std::size_t k = 0; k < S.size(); ++k) {
            if (S[k] == 0) zero_at = k;
            unpack_digits(ctx, S[k], digs);
            for (std::size_t j = 0; j < n; ++j) {
                std::uint16_t d = digs[j];
                for (i64 it = 0; it < ellr; ++it) d = ctx.sigma_tab[d];
                twisted.push_back(d);
            }
        }
    }

    const auto scan = [&](std::uint64_t lo, std::uint64_t hi, VectorSet& out) {
        std::vector<std::uint16_t> ud;
        unpack_digits(ctx, lo, ud);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            bool ortho = true;
            for (std::size_t k = 0; k < S.size() && ortho; ++k) {
                if (k == zero_at) continue;
                std::uint64_t acc = 0;
                const std::uint16_t* cd = twisted.data() + k * n;
                for (std::size_t j = 0; j < n; ++j)
                    acc = ctx.add_tab[acc * rs + ctx.mul_tab[ud[j] * rs + cd[j]]];
                ortho = acc == 0;
            }
            if (ortho) out.push_back(idx);
            // Increment the digit odometer alongside idx.
            for (std::size_t j = 0; j < n; ++j) {
                if (++ud[j] < rs) break;
                ud[j] = 0;
            }
        }
    };

    VectorSet out;
    const std::uint64_t lead = ctx.pow[n - 1];
    if (jobs <= 1 || ctx.space <= lead) {
        scan(0, ctx.space, out);
    } else {
        const auto workers = static_cast<std::uint64_t>(jobs);
        std::vector<VectorSet> parts(workers);
        std::vector<std::thread> pool;
        for (std::uint64_t w = 0; w < workers; ++w) {
            const std::uint64_t lo = rs * w / workers * lead;
            const std::uint64_t hi = rs * (w + 1) / workers * lead;
            pool.emplace_back(
                [&, lo, hi, w] { scan(lo, hi, parts[static_cast<std::size_t>(w)]); });
        }
        for (auto& th : pool) th.join();
        for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    }
    if (static_cast<u128>(out.size()) * static_cast<u128>(std::max<std::size_t>(S.size(), 1)) !=
        static_cast<u128>(ctx.space))
        throw std::logic_error("brute_dual: |S| * |dual| != |R|^n (arithmetic bug?)");
    return out;
}

inline VectorSet set_intersect(const VectorSet& A, const VectorSet& B) {
    VectorSet out;
    std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(out));
    return out;
}

inline VectorSet brute_hull(const BruteContext& ctx, const VectorSet& S, i64 ell, int jobs = 1) {
    return set_intersect(S, brute_dual(ctx, S, ell, jobs));
}

/** Smallest packed index in A \ B, or -1 if A is a subset of B. */
inline i64 diff_witness(const VectorSet& A, const VectorSet& B) {
    for (std::uint64_t x : A)
        if (!std::binary_search(B.begin(), B.end(), x)) return static_cast<i64>(x);
    return -1;
}

/* ======================================================================== */
/* profiles from raw sets                                                   */
/* ======================================================================== */

/** Deterministic closure sampling: x + y and theta x stay in S. */
inline bool closure_sample(const BruteContext& ctx, const VectorSet& S, int trials = 256) {
    if (S.empty() || S[0] != 0) return false;  // a module contains 0
    const auto rs = static_cast<std::uint64_t>(ctx.rsize);
    const auto n = static_cast<std::size_t>(ctx.n);
    const std::uint16_t theta_idx =
        static_cast<std::uint16_t>(r_index(ctx.ring, r_theta(ctx.ring)));
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_int_distribution<std::size_t> pick(0, S.size() - 1);
    std::vector<std::uint16_t> xd, yd;
    for (int trial = 0; trial < trials; ++trial) {
        unpack_digits(ctx, S[pick(rng)], xd);
        unpack_digits(ctx, S[pick(rng)], yd);
        std::uint64_t sum = 0, scaled = 0;
        for (std::size_t j = 0; j < n; ++j) {
            sum += static_cast<std::uint64_t>(ctx.add_tab[xd[j] * rs + yd[j]]) * ctx.pow[j];
            scaled += static_cast<std::uint64_t>(ctx.mul_tab[theta_idx * rs + xd[j]]) * ctx.pow[j];
        }
        if (!std::binary_search(S.begin(), S.end(), sum)) return false;
        if (!std::binary_search(S.begin(), S.end(), scaled)) return false;
    }
    return true;
}

/**
 * Parameter tuple (k_0, ..., k_{s-1}) of a raw codeword set.
 *
 * For each t, the members divisible by theta^t, shifted down by t and read
 * in the residue field, form an F_q-subspace of F_q^n of dimension
 * k_0 + ... + k_t; Gaussian elimination recovers these partial sums and the
 * profile is their difference sequence.  This never consults the defining
 * multiset, so it is an independent check of the analytic parameters.
 */
inline std::vector<i64> profile_of_set(const BruteContext& ctx, const VectorSet& S) {
    if (!closure_sample(ctx, S))
        throw std::invalid_argument("profile_of_set: set fails module closure sampling");
    const ChainRingCtx& R = ctx.ring;
    const FieldCtx& F = R.gr.residue;
    const FOps ops{&F};
    const int s = R.spec.s;
    const auto n = static_cast<std::size_t>(ctx.n);

    // Min valuation of each member, from the per-element table.
    std::vector<std::uint8_t> minval(S.size());
    {
        std::vector<std::uint16_t> digs;
        for (std::size_t k = 0; k < S.size(); ++k) {
            unpack_digits(ctx, S[k], digs);
            std::uint8_t v = static_cast<std::uint8_t>(s);
            for (std::size_t j = 0; j < n; ++j) v = std::min(v, ctx.val_tab[digs[j]]);
            minval[k] = v;
        }
    }

    std::vector<i64> params(static_cast<std::size_t>(s), 0);
    i64 prev_dim = 0;
    for (int t = 0; t < s; ++t) {
        // Incremental Gaussian elimination over F_q; pivots[c] = row with
        // leading column c, kept reduced at and left of its pivot.
        std::vector<std::vector<FElem>> pivot_rows(n);
        std::vector<char> has_pivot(n, 0);
        i64 dim = 0;
        for (std::size_t k = 0; k < S.size() && dim < static_cast<i64>(n); ++k) {
            if (minval[k] < t) continue;
            RVec w = unpack_vector(ctx, S[k]);
            std::vector<FElem> row(n);
            for (std::size_t j = 0; j < n; ++j)
                row[j] = r_pi(R, r_theta_shift_down(R, w[j], t));
            for (std::size_t c = 0; c < n; ++c) {
                if (ops.is_zero(row[c])) continue;
                if (!has_pivot[c]) {
                    const FElem inv = ops.inv(row[c]);
                    for (std::size_t j = c; j < n; ++j) row[j] = ops.mul(row[j], inv);
                    pivot_rows[c] = std::move(row);
                    has_pivot[c] = 1;
                    ++dim;
                    break;
                }
                const FElem f = row[c];
                for (std::size_t j = c; j < n; ++j)
                    row[j] = ops.sub(row[j], ops.mul(f, pivot_rows[c][j]));
            }
        }
        params[static_cast<std::size_t>(t)] = dim - prev_dim;
        prev_dim = dim;
    }
    return params;
}

}  // namespace hullcodes
