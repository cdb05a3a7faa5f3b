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
 * @file serialcodes.hpp
 * @brief Cyclic serial codes over chain rings: defining multisets, their
 *        lattice operations, duals and hulls in closed form, and generator
 *        realizations.
 *
 * A defining multiset A = (A_0, ..., A_s) is an ordered partition of the
 * residues mod n into s + 1 parts, each part a union of q-cyclotomic cosets.
 * It describes the cyclic serial code
 *
 *   C(A) = <{ theta^t Omega(complement of A_t) : 0 <= t <= s-1 }>
 *        = (+)_{t < s} theta^t <Omega(complement of A_t)>,
 *
 * a module with parameter tuple (|A_0|, ..., |A_{s-1}|) and
 * q-dimension sum_t (s - t) |A_t|.  Residues in A_t sit "at depth t": the
 * lower the part index, the more of the code survives at that root.
 *
 * Closed-form operations on multisets (all verified against brute force in
 * the test suite):
 *
 *   sum        C(A) + C(B)    = C(A ⊔ B),  per-residue min of part indices
 *   intersect  C(A) ∩ C(B)   = C(A ⊓ B),  per-residue max of part indices
 *   dual       C(A)^{perp l}  = C(-p^l A^{<>}),  A^{<>} the part reversal
 *   sigma      sigma^h(C(A))  = C(p^h A)
 *   hull       H_l(C(A))      = C(A ⊓ (-p^l A^{<>}))
 *
 * The part-index formulation of ⊔ and ⊓ is equivalent to the level-set
 * formulation E_0 = A_0 ∪ B_0, E_t = (A_t ∪ B_t) \ U_{i<t} (A_i ∪ B_i)
 * (the final part being the leftover complement); the equivalence is
 * asserted by the unit tests.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hullcodes/ringpoly.hpp"

namespace hullcodes {

/* ======================================================================== */
/* defining multisets                                                       */
/* ======================================================================== */

struct DefiningMultiset {
    i64 n = 1;
    int s = 1;
    std::vector<std::vector<i64>> parts;  // s + 1 sorted parts partitioning [0, n)
};

/** Build and validate an ordered partition of [0, n) into s + 1 parts. */
inline DefiningMultiset multiset_make(i64 n, int s, std::vector<std::vector<i64>> parts) {
    if (n < 1) throw std::invalid_argument("multiset_make: n must be >= 1");
    if (s < 1) throw std::invalid_argument("multiset_make: s must be >= 1");
    if (parts.size() != static_cast<std::size_t>(s) + 1)
        throw std::invalid_argument("multiset_make: expected s + 1 parts");
    DefiningMultiset A;
    A.n = n;
    A.s = s;
    A.parts.resize(parts.size());
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t t = 0; t < parts.size(); ++t) {
        A.parts[t] = normalize_residues(n, parts[t]);
        if (A.parts[t].size() != parts[t].size())
            throw std::invalid_argument("multiset_make: repeated residue inside a part");
        for (i64 z : A.parts[t]) {
            if (owner[static_cast<std::size_t>(z)] != -1)
                throw std::invalid_argument("multiset_make: parts overlap");
            owner[static_cast<std::size_t>(z)] = static_cast<int>(t);
        }
    }
    for (i64 z = 0; z < n; ++z)
        if (owner[static_cast<std::size_t>(z)] == -1)
            throw std::invalid_argument("multiset_make: parts do not cover [0, n)");
    return A;
}

/** The all-at-depth-s multiset (the zero code). */
inline DefiningMultiset multiset_zero(i64 n, int s) {
    std::vector<std::vector<i64>> parts(static_cast<std::size_t>(s) + 1);
    for (i64 z = 0; z < n; ++z) parts.back().push_back(z);
    return multiset_make(n, s, std::move(parts));
}

/** The all-at-depth-0 multiset (the full space R^n). */
inline DefiningMultiset multiset_full(i64 n, int s) {
    std::vector<std::vector<i64>> parts(static_cast<std::size_t>(s) + 1);
    for (i64 z = 0; z < n; ++z) parts.front().push_back(z);
    return multiset_make(n, s, std::move(parts));
}

inline bool multiset_eq(const DefiningMultiset& A, const DefiningMultiset& B) {
    return A.n == B.n && A.s == B.s && A.parts == B.parts;
}

/** Part index of a residue. */
inline int multiset_part_of(const DefiningMultiset& A, i64 z) {
    z = mod_floor(z, A.n);
    for (std::size_t t = 0; t < A.parts.size(); ++t) {
        if (std::binary_search(A.parts[t].begin(), A.parts[t].end(), z))
            return static_cast<int>(t);
    }
    throw std::logic_error("multiset_part_of: not a partition");  // unreachable
}

/** Parameter tuple (|A_0|, ..., |A_{s-1}|). */
inline std::vector<i64> multiset_params(const DefiningMultiset& A) {
    std::vector<i64> k;
    k.reserve(static_cast<std::size_t>(A.s));
    for (int t = 0; t < A.s; ++t) k.push_back(static_cast<i64>(A.parts[static_cast<std::size_t>(t)].size()));
    return k;
}

/** q-dimension sum_t (s - t) |A_t|. */
inline i64 multiset_qdim(const DefiningMultiset& A) {
    i64 d = 0;
    for (int t = 0; t < A.s; ++t)
        d += static_cast<i64>(A.s - t) * static_cast<i64>(A.parts[static_cast<std::size_t>(t)].size());
    return d;
}

/** Apply z |-> c z (c a unit mod n) to every part. */
inline DefiningMultiset multiset_scale(const DefiningMultiset& A, i64 c) {
    if (std::gcd(mod_floor(c, A.n), A.n) != 1)
        throw std::invalid_argument("multiset_scale: c must be a unit mod n");
    DefiningMultiset B = A;
    for (auto& part : B.parts) part = residue_scale(A.n, c, part);
    return B;
}

/** Part reversal (A_s, ..., A_0). */
inline DefiningMultiset multiset_diamond(const DefiningMultiset& A) {
    DefiningMultiset B = A;
    std::reverse(B.parts.begin(), B.parts.end());
    return B;
}

/** Defining multiset of C(A)^{perp ell}: -p^ell A^{<>}. */
inline DefiningMultiset dual_multiset(const RingSpec& spec, const DefiningMultiset& A, i64 ell) {
    const i64 c = pow_mod(spec.p, mod_floor(ell, spec.r), A.n);
    return multiset_scale(multiset_diamond(A), mod_floor(-c, A.n));
}

/** Defining multiset of sigma^h(C(A)): p^h A. */
inline DefiningMultiset sigma_multiset(const RingSpec& spec, const DefiningMultiset& A, i64 h) {
    return multiset_scale(A, pow_mod(spec.p, mod_floor(h, spec.r), A.n));
}

/** C(A) + C(B) = C(A ⊔ B): per-residue min of part indices. */
inline DefiningMultiset multiset_sqcup(const DefiningMultiset& A, const DefiningMultiset& B) {
    if (A.n != B.n || A.s != B.s)
        throw std::invalid_argument("multiset_sqcup: mismatched code spaces");
    std::vector<std::vector<i64>> parts(static_cast<std::size_t>(A.s) + 1);
    for (i64 z = 0; z < A.n; ++z)
        parts[static_cast<std::size_t>(std::min(multiset_part_of(A, z), multiset_part_of(B, z)))]
            .push_back(z);
    return multiset_make(A.n, A.s, std::move(parts));
}

/** C(A) ∩ C(B) = C(A ⊓ B): per-residue max of part indices. */
inline DefiningMultiset multiset_sqcap(const DefiningMultiset& A, const DefiningMultiset& B) {
    if (A.n != B.n || A.s != B.s)
        throw std::invalid_argument("multiset_sqcap: mismatched code spaces");
    std::vector<std::vector<i64>> parts(static_cast<std::size_t>(A.s) + 1);
    for (i64 z = 0; z < A.n; ++z)
        parts[static_cast<std::size_t>(std::max(multiset_part_of(A, z), multiset_part_of(B, z)))]
            .push_back(z);
    return multiset_make(A.n, A.s, std::move(parts));
}

/** Defining multiset of the ell-Galois hull H_ell(C(A)) = C(A) ∩ C(A)^{perp ell}. */
inline DefiningMultiset hull_multiset(const RingSpec& spec, const DefiningMultiset& A, i64 ell) {
    return multiset_sqcap(A, dual_multiset(spec, A, ell));
}

/** Every part must be a union of q-cosets for C(A) to be cyclic. */
inline void multiset_validate_cosets(const CosetAtlas& atlas, const DefiningMultiset& A) {
    if (atlas.n != A.n) throw std::invalid_argument("multiset_validate_cosets: n mismatch");
    for (const auto& part : A.parts) (void)coset_indices_of_union(atlas, part);
}

/** Part index per coset (atlas order); parts must be coset-closed. */
inline std::vector<int> part_index_profile(const CosetAtlas& atlas, const DefiningMultiset& A) {
    multiset_validate_cosets(atlas, A);
    std::vector<int> rho;
    rho.reserve(atlas.cosets.size());
    for (const Coset& c : atlas.cosets) rho.push_back(multiset_part_of(A, c.rep));
    return rho;
}

/** Rebuild a multiset from a per-coset part-index profile (atlas order). */
inline DefiningMultiset multiset_from_part_indices(const CosetAtlas& atlas, int s,
                                                   const std::vector<int>& rho) {
    if (rho.size() != atlas.cosets.size())
        throw std::invalid_argument("multiset_from_part_indices: profile length mismatch");
    std::vector<std::vector<i64>> parts(static_cast<std::size_t>(s) + 1);
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (rho[i] < 0 || rho[i] > s)
            throw std::invalid_argument("multiset_from_part_indices: index out of range");
        for (i64 z : atlas.cosets[i].elems) parts[static_cast<std::size_t>(rho[i])].push_back(z);
    }
    return multiset_make(atlas.n, s, std::move(parts));
}

/* ======================================================================== */
/* codes                                                                    */
/* ======================================================================== */

struct CyclicSerialCode {
    ChainRingCtx ring;
    GRFactorTable table;
    DefiningMultiset A;
};

/**
 * The cyclic serial code C(A) over ring for length table.n.  Validates that
 * the factor table belongs to the ring's coefficient ring and that every
 * part of A is a union of q-cosets.
 */
inline CyclicSerialCode make_code(const ChainRingCtx& ring, const GRFactorTable& table,
                                  DefiningMultiset A) {
    if (table.n != A.n) throw std::invalid_argument("make_code: length mismatch");
    if (ring.spec.s != A.s) throw std::invalid_argument("make_code: depth mismatch");
    if (table.ring.p != ring.gr.p || table.ring.a != ring.gr.a || table.ring.r != ring.gr.r ||
        table.ring.modulus != ring.gr.modulus)
        throw std::invalid_argument("make_code: factor table built over a different ring");
    multiset_validate_cosets(table.atlas, A);
    return CyclicSerialCode{ring, table, std::move(A)};
}

inline std::vector<i64> code_params(const CyclicSerialCode& C) { return multiset_params(C.A); }

inline i64 code_qdim(const CyclicSerialCode& C) { return multiset_qdim(C.A); }

/**
 * Generator rows { X^j theta^t Omega(complement of A_t) : t < s, j < |A_t| }.
 * Row degrees stay below n, so no cyclic reduction occurs.
 */
inline std::vector<RVec> generator_rows(const CyclicSerialCode& C) {
    const ChainRingCtx& R = C.ring;
    const i64 n = C.A.n;
    std::vector<RVec> rows;
    for (int t = 0; t < C.A.s; ++t) {
        const auto& part = C.A.parts[static_cast<std::size_t>(t)];
        if (part.empty()) continue;
        const GRPoly g = omega(C.table, residue_complement(n, part));
        RVec base = rv_zero(R, n);
        for (std::size_t d = 0; d < g.size(); ++d)
            base[d] = r_theta_mul(R, r_from_gr(R, g[d]), t);
        for (std::size_t j = 0; j < part.size(); ++j) {
            RVec row = rv_zero(R, n);
            for (std::size_t d = 0; d < g.size(); ++d) row[d + j] = base[d];
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

inline ThetaEchelon code_echelon(const CyclicSerialCode& C) {
    return theta_echelon(C.ring, generator_rows(C));
}

inline CyclicSerialCode dual_code(const CyclicSerialCode& C, i64 ell) {
    return CyclicSerialCode{C.ring, C.table, dual_multiset(C.ring.spec, C.A, ell)};
}

inline CyclicSerialCode hull_code(const CyclicSerialCode& C, i64 ell) {
    return CyclicSerialCode{C.ring, C.table, hull_multiset(C.ring.spec, C.A, ell)};
}

inline CyclicSerialCode sigma_code(const CyclicSerialCode& C, i64 h) {
    return CyclicSerialCode{C.ring, C.table, sigma_multiset(C.ring.spec, C.A, h)};
}

inline CyclicSerialCode sum_code(const CyclicSerialCode& C, const CyclicSerialCode& D) {
    return CyclicSerialCode{C.ring, C.table, multiset_sqcup(C.A, D.A)};
}

inline CyclicSerialCode intersect_code(const CyclicSerialCode& C, const CyclicSerialCode& D) {
    return CyclicSerialCode{C.ring, C.table, multiset_sqcap(C.A, D.A)};
}

/** Generator polynomial of the residue code pi(C(A)) over F_q. */
inline FPoly residue_generator(const CyclicSerialCode& C) {
    const FOps K{&C.table.field.field};
    FPoly g = poly_one(K);
    const auto inside = coset_indices_of_union(C.table.atlas, C.A.parts[0]);
    for (std::size_t ci = 0; ci < C.table.atlas.cosets.size(); ++ci) {
        if (!std::binary_search(inside.begin(), inside.end(), ci))
            g = poly_mul(K, g, C.table.field.factors[ci]);
    }
    return g;
}

/* ------------------------------------------------------------------------ */
/* predicates                                                                */
/* ------------------------------------------------------------------------ */

/** LCD: the ell-Galois hull is the zero code. */
inline bool is_lcd(const RingSpec& spec, const DefiningMultiset& A, i64 ell) {
    const DefiningMultiset H = hull_multiset(spec, A, ell);
    for (int t = 0; t < H.s; ++t)
        if (!H.parts[static_cast<std::size_t>(t)].empty()) return false;
    return true;
}

/** Self-orthogonal: C(A) is contained in its ell-dual (hull = C(A)). */
inline bool is_self_orthogonal(const RingSpec& spec, const DefiningMultiset& A, i64 ell) {
    return multiset_eq(hull_multiset(spec, A, ell), A);
}

/** Self-dual: C(A) equals its ell-dual. */
inline bool is_self_dual(const RingSpec& spec, const DefiningMultiset& A, i64 ell) {
    return multiset_eq(dual_multiset(spec, A, ell), A);
}

}  // namespace hullcodes
