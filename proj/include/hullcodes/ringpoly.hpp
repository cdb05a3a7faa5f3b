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
 * @file ringpoly.hpp
 * @brief Finite chain rings R(p, a, r, e, s): element arithmetic, vectors,
 *        Galois inner products, and theta-adic echelon forms.
 *
 * A chain ring is described by five invariants: characteristic p^a, residue
 * field F_q with q = p^r, a generator theta of the maximal ideal with
 * ramification index e and nilpotency index s, subject to
 * (a - 1) e < s <= a e.  Element arithmetic is implemented for the two
 * families the library computes in:
 *
 *   galois_ring       e = 1 (hence s = a):  R = GR(p^a, r), theta = p
 *   field_nilpotent   a = 1 and e = s:      R = F_q[u]/(u^s), theta = u
 *
 * Any other parameter set is accepted as a RingSpec (the q,s-combinatorics
 * modules only need q and s) but make_ring refuses it with
 * UnsupportedFamilyError.
 *
 * The ell-Galois inner product of u, v in R^n is
 *
 *   <u, v>_ell = sum_j u_j sigma^ell(v_j),
 *
 * sigma the Frobenius of R (acting on Teichmuller digits for a Galois ring,
 * on u-digit coefficients for F_q[u]/(u^s)).
 *
 * theta_echelon brings a row list to the column-permuted standard form: at
 * each step the pivot is a remaining entry of minimal theta-valuation among
 * unpivoted columns (ties: leftmost column, then earliest row).  As shown by
 * the valuation argument in the header of the routine, pivot valuations are
 * then nondecreasing, the pivot counts k_t = #{pivots of valuation t} are
 * the module invariants, and |C| = q^{sum_t (s - t) k_t}.
 */

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hullcodes/grarith.hpp"

namespace hullcodes {

/** Thrown when element arithmetic is requested for a ring family that has none. */
struct UnsupportedFamilyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* ======================================================================== */
/* ring specification                                                       */
/* ======================================================================== */

enum class RingFamily {
    galois_ring,        // e = 1, s = a: GR(p^a, r)
    field_nilpotent,    // a = 1, e = s: F_q[u]/(u^s)
    general_eisenstein  // everything else: combinatorics only
};

struct RingSpec {
    i64 p = 2;
    int a = 1, r = 1, e = 1, s = 1;
    i64 q = 2;  // p^r
    RingFamily family = RingFamily::galois_ring;

    static RingSpec make(i64 p, int a, int r, int e, int s) {
        if (!is_prime(p)) throw std::invalid_argument("RingSpec: p must be prime");
        if (a < 1 || r < 1 || e < 1 || s < 1)
            throw std::invalid_argument("RingSpec: a, r, e, s must be >= 1");
        if (!((a - 1) * e < s && s <= a * e))
            throw std::invalid_argument("RingSpec: need (a-1)e < s <= ae");
        RingSpec spec;
        spec.p = p;
        spec.a = a;
        spec.r = r;
        spec.e = e;
        spec.s = s;
        spec.q = ipow64(p, r);
        if (e == 1) {
            spec.family = RingFamily::galois_ring;  // s = a is forced
        } else if (a == 1 && e == s) {
            spec.family = RingFamily::field_nilpotent;
        } else {
            spec.family = RingFamily::general_eisenstein;
        }
        return spec;
    }

    /** Named shortcuts for common rings. */
    static RingSpec named(const std::string& name) {
        if (name == "Z4") return make(2, 2, 1, 1, 2);
        if (name == "Z8") return make(2, 3, 1, 1, 3);
        if (name == "Z9") return make(3, 2, 1, 1, 2);
        if (name == "Z27") return make(3, 3, 1, 1, 3);
        if (name == "F2u2") return make(2, 1, 1, 2, 2);
        if (name == "GR42") return make(2, 2, 2, 1, 2);
        throw std::invalid_argument(
            "RingSpec::named: unknown ring '" + name +
            "' (known: Z4, Z8, Z9, Z27, F2u2, GR42)");
    }

    bool arithmetic_supported() const { return family != RingFamily::general_eisenstein; }

    std::string label() const {
        return "R(p=" + std::to_string(p) + ",a=" + std::to_string(a) + ",r=" +
               std::to_string(r) + ",e=" + std::to_string(e) + ",s=" + std::to_string(s) + ")";
    }
};

/* ======================================================================== */
/* chain ring context and element arithmetic                                */
/* ======================================================================== */

/**
 * Elements are flat coefficient vectors:
 *   galois_ring      length r, coefficients in [0, p^a)      (= GRElem)
 *   field_nilpotent  length r*s, u-digit j occupies [j r, (j+1) r), mod p
 */
using RElem = std::vector<i64>;

struct ChainRingCtx {
    RingSpec spec;
    GaloisRingCtx gr;  // coefficient ring of the factor tables: GR(p^a, r),
                       // which is F_q itself when a = 1
    int elem_len = 1;
    i64 size = 2;      // |R| = q^s
};

inline ChainRingCtx make_ring(const RingSpec& spec) {
    if (!spec.arithmetic_supported())
        throw UnsupportedFamilyError(
            "make_ring: unsupported ring family for element arithmetic: " + spec.label() +
            " (supported: e = 1 Galois rings and a = 1, e = s nilpotent extensions)");
    ChainRingCtx ctx;
    ctx.spec = spec;
    ctx.gr = make_galois_ring(spec.p, spec.a, spec.r);
    ctx.elem_len = (spec.family == RingFamily::galois_ring) ? spec.r : spec.r * spec.s;
    ctx.size = ipow64(spec.q, spec.s);
    return ctx;
}

inline RElem r_zero(const ChainRingCtx& R) {
    return RElem(static_cast<std::size_t>(R.elem_len), 0);
}

inline RElem r_one(const ChainRingCtx& R) {
    RElem e = r_zero(R);
    e[0] = 1 % ((R.spec.family == RingFamily::galois_ring) ? R.gr.pa : R.spec.p);
    return e;
}

inline RElem r_from_int(const ChainRingCtx& R, i64 c) {
    RElem e = r_zero(R);
    e[0] = mod_floor(c, (R.spec.family == RingFamily::galois_ring) ? R.gr.pa : R.spec.p);
    return e;
}

inline bool r_is_zero(const ChainRingCtx&, const RElem& x) {
    for (i64 c : x)
        if (c != 0) return false;
    return true;
}

namespace detail {
/** u-digit j of a field_nilpotent element, as a residue-field element. */
inline FElem fn_digit(const ChainRingCtx& R, const RElem& x, int j) {
    const auto base = static_cast<std::size_t>(j * R.spec.r);
    return FElem(x.begin() + static_cast<long>(base),
                 x.begin() + static_cast<long>(base + static_cast<std::size_t>(R.spec.r)));
}

inline void fn_set_digit(const ChainRingCtx& R, RElem& x, int j, const FElem& d) {
    const auto base = static_cast<std::size_t>(j * R.spec.r);
    for (int i = 0; i < R.spec.r; ++i) x[base + static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(i)];
}
}  // namespace detail

inline RElem r_add(const ChainRingCtx& R, const RElem& x, const RElem& y) {
    if (R.spec.family == RingFamily::galois_ring) return gr_add(R.gr, x, y);
    RElem z(x);
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = (z[i] + y[i]) % R.spec.p;
    return z;
}

inline RElem r_sub(const ChainRingCtx& R, const RElem& x, const RElem& y) {
    if (R.spec.family == RingFamily::galois_ring) return gr_sub(R.gr, x, y);
    RElem z(x);
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = mod_floor(z[i] - y[i], R.spec.p);
    return z;
}

inline RElem r_neg(const ChainRingCtx& R, const RElem& x) {
    if (R.spec.family == RingFamily::galois_ring) return gr_neg(R.gr, x);
    RElem z(x);
    for (auto& v : z) v = mod_floor(-v, R.spec.p);
    return z;
}

inline RElem r_mul(const ChainRingCtx& R, const RElem& x, const RElem& y) {
    if (R.spec.family == RingFamily::galois_ring) return gr_mul(R.gr, x, y);
    const int s = R.spec.s;
    RElem z = r_zero(R);
    for (int i = 0; i < s; ++i) {
        const FElem xi = detail::fn_digit(R, x, i);
        if (f_is_zero(R.gr.residue, xi)) continue;
        for (int j = 0; j + i < s; ++j) {
            const FElem prod = f_mul(R.gr.residue, xi, detail::fn_digit(R, y, j));
            detail::fn_set_digit(R, z, i + j,
                                 f_add(R.gr.residue, detail::fn_digit(R, z, i + j), prod));
        }
    }
    return z;
}

inline RElem r_pow(const ChainRingCtx& R, RElem x, u128 e) {
    RElem acc = r_one(R);
    while (e > 0) {
        if (e & 1) acc = r_mul(R, acc, x);
        x = r_mul(R, x, x);
        e >>= 1;
    }
    return acc;
}

/** The fixed maximal-ideal generator theta (p, resp. u). */
inline RElem r_theta(const ChainRingCtx& R) {
    RElem e = r_zero(R);
    if (R.spec.family == RingFamily::galois_ring) {
        e[0] = R.spec.p % R.gr.pa;
    } else {
        if (R.spec.s > 1) e[static_cast<std::size_t>(R.spec.r)] = 1;
    }
    return e;
}

/** theta^t x (t >= 0; theta^s = 0). */
inline RElem r_theta_mul(const ChainRingCtx& R, const RElem& x, int t) {
    if (t < 0) throw std::invalid_argument("r_theta_mul: t must be >= 0");
    if (t >= R.spec.s) return r_zero(R);
    if (R.spec.family == RingFamily::galois_ring) return gr_scale(R.gr, ipow64(R.spec.p, t), x);
    RElem z = r_zero(R);
    for (int j = 0; j + t < R.spec.s; ++j)
        detail::fn_set_digit(R, z, j + t, detail::fn_digit(R, x, j));
    return z;
}

/** theta-adic valuation in [0, s]; the zero element has valuation s. */
inline int r_valuation(const ChainRingCtx& R, const RElem& x) {
    const int s = R.spec.s;
    if (R.spec.family == RingFamily::galois_ring) {
        int v = s;
        for (i64 c : x) {
            int vc = 0;
            if (c == 0) continue;
            while (c % R.spec.p == 0) {
                c /= R.spec.p;
                ++vc;
            }
            v = std::min(v, vc);
        }
        return v;
    }
    for (int j = 0; j < s; ++j) {
        if (!f_is_zero(R.gr.residue, detail::fn_digit(R, x, j))) return j;
    }
    return s;
}

/** Exact division by theta^t; requires valuation(x) >= t. */
inline RElem r_theta_shift_down(const ChainRingCtx& R, const RElem& x, int t) {
    if (t < 0) throw std::invalid_argument("r_theta_shift_down: t must be >= 0");
    if (r_valuation(R, x) < t)
        throw std::invalid_argument("r_theta_shift_down: valuation below t");
    if (t == 0) return x;
    if (R.spec.family == RingFamily::galois_ring) {
        const i64 pt = ipow64(R.spec.p, t);
        RElem z(x);
        for (auto& v : z) v /= pt;
        return z;
    }
    RElem z = r_zero(R);
    for (int j = t; j < R.spec.s; ++j)
        detail::fn_set_digit(R, z, j - t, detail::fn_digit(R, x, j));
    return z;
}

/** Split x = low + theta^t * high with low supported on digits < t. */
inline std::pair<RElem, RElem> r_theta_split(const ChainRingCtx& R, const RElem& x, int t) {
    if (t <= 0) return {r_zero(R), x};
    if (t >= R.spec.s) return {x, r_zero(R)};
    if (R.spec.family == RingFamily::galois_ring) {
        const i64 pt = ipow64(R.spec.p, t);
        RElem low(x), high(x);
        for (std::size_t i = 0; i < x.size(); ++i) {
            low[i] = x[i] % pt;
            high[i] = x[i] / pt;
        }
        return {low, high};
    }
    RElem low = r_zero(R), high = r_zero(R);
    for (int j = 0; j < R.spec.s; ++j) {
        const FElem d = detail::fn_digit(R, x, j);
        if (j < t) {
            detail::fn_set_digit(R, low, j, d);
        } else {
            detail::fn_set_digit(R, high, j - t, d);
        }
    }
    return {low, high};
}

/** Reduction mod theta onto the residue field F_q. */
inline FElem r_pi(const ChainRingCtx& R, const RElem& x) {
    if (R.spec.family == RingFamily::galois_ring) return gr_pi(R.gr, x);
    return detail::fn_digit(R, x, 0);
}

/** Canonical coefficientwise lift F_q -> R (a set-section of r_pi). */
inline RElem r_lift(const ChainRingCtx& R, const FElem& c) {
    RElem e = r_zero(R);
    for (int i = 0; i < R.spec.r; ++i) e[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
    return e;
}

/** Embed a coefficient of the factor table's ring GR(p^a, r) into R. */
inline RElem r_from_gr(const ChainRingCtx& R, const GRElem& c) {
    if (R.spec.family == RingFamily::galois_ring) return c;
    return r_lift(R, FElem(c.begin(), c.end()));  // a = 1: GR(p, r) = F_q
}

inline bool r_is_unit(const ChainRingCtx& R, const RElem& x) {
    return !f_is_zero(R.gr.residue, r_pi(R, x));
}

/** Inverse of a unit (Newton iteration lifting the residue-field inverse). */
inline RElem r_inv(const ChainRingCtx& R, const RElem& x) {
    if (R.spec.family == RingFamily::galois_ring) return gr_inv(R.gr, x);
    if (!r_is_unit(R, x)) throw std::invalid_argument("r_inv: not a unit");
    RElem y = r_lift(R, f_inv(R.gr.residue, r_pi(R, x)));
    const RElem two = r_from_int(R, 2);
    for (int prec = 1; prec < R.spec.s; prec *= 2)
        y = r_mul(R, y, r_sub(R, two, r_mul(R, x, y)));
    if (!r_is_zero(R, r_sub(R, r_mul(R, x, y), r_one(R))))
        throw std::logic_error("r_inv: Newton iteration failed");
    return y;
}

/** Frobenius sigma of R. */
inline RElem r_sigma(const ChainRingCtx& R, const RElem& x) {
    if (R.spec.family == RingFamily::galois_ring) return gr_frobenius(R.gr, x);
    RElem z = r_zero(R);
    for (int j = 0; j < R.spec.s; ++j)
        detail::fn_set_digit(R, z, j,
                             f_pow(R.gr.residue, detail::fn_digit(R, x, j),
                                   static_cast<u128>(R.spec.p)));
    return z;
}

inline RElem r_sigma_iter(const ChainRingCtx& R, RElem x, i64 h) {
    h = mod_floor(h, R.spec.r);
    for (i64 i = 0; i < h; ++i) x = r_sigma(R, x);
    return x;
}

/** Enumeration index in [0, |R|): coefficients as mixed-radix digits. */
inline i64 r_index(const ChainRingCtx& R, const RElem& x) {
    const i64 radix = (R.spec.family == RingFamily::galois_ring) ? R.gr.pa : R.spec.p;
    i64 idx = 0;
    for (std::size_t i = x.size(); i-- > 0;) {
        idx = idx * radix + x[i];
        if (i == 0) break;
    }
    return idx;
}

inline RElem r_from_index(const ChainRingCtx& R, i64 idx) {
    if (idx < 0 || idx >= R.size) throw std::invalid_argument("r_from_index: out of range");
    const i64 radix = (R.spec.family == RingFamily::galois_ring) ? R.gr.pa : R.spec.p;
    RElem x = r_zero(R);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = idx % radix;
        idx /= radix;
    }
    return x;
}

/** Coefficient adapter for R (inv on units only). */
struct ROps {
    const ChainRingCtx* R;
    using Elem = RElem;
    Elem zero() const { return r_zero(*R); }
    Elem one() const { return r_one(*R); }
    bool is_zero(const Elem& e) const { return r_is_zero(*R, e); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return r_add(*R, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return r_sub(*R, a, b); }
    Elem neg(const Elem& a) const { return r_neg(*R, a); }
    Elem mul(const Elem& a, const Elem& b) const { return r_mul(*R, a, b); }
    Elem inv(const Elem& a) const { return r_inv(*R, a); }
};

using RPoly = Poly<ROps>;

/* ======================================================================== */
/* vectors over R and Galois inner products                                 */
/* ======================================================================== */

using RVec = std::vector<RElem>;

inline RVec rv_zero(const ChainRingCtx& R, i64 n) {
    return RVec(static_cast<std::size_t>(n), r_zero(R));
}

inline RVec rv_add(const ChainRingCtx& R, const RVec& u, const RVec& v) {
    RVec w(u);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = r_add(R, w[i], v[i]);
    return w;
}

inline RVec rv_sub(const ChainRingCtx& R, const RVec& u, const RVec& v) {
    RVec w(u);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = r_sub(R, w[i], v[i]);
    return w;
}

inline RVec rv_scale(const ChainRingCtx& R, const RElem& c, const RVec& u) {
    RVec w(u);
    for (auto& e : w) e = r_mul(R, c, e);
    return w;
}

inline bool rv_is_zero(const ChainRingCtx& R, const RVec& u) {
    for (const auto& e : u)
        if (!r_is_zero(R, e)) return false;
    return true;
}

/** <u, v>_ell = sum_j u_j sigma^ell(v_j). */
inline RElem galois_inner(const ChainRingCtx& R, const RVec& u, const RVec& v, i64 ell) {
    if (u.size() != v.size())
        throw std::invalid_argument("galois_inner: length mismatch");
    RElem acc = r_zero(R);
    for (std::size_t j = 0; j < u.size(); ++j)
        acc = r_add(R, acc, r_mul(R, u[j], r_sigma_iter(R, v[j], ell)));
    return acc;
}

/* ======================================================================== */
/* theta-adic echelon form                                                  */
/* ======================================================================== */

/**
 * Column-permuted standard form of the row module.
 *
 * Pivot rule: among all remaining entries in unpivoted columns choose one of
 * minimal valuation t (ties: leftmost column, then earliest row).  Because
 * the pivot row is normalized to have entry theta^t (times a unit made 1)
 * and every other remaining entry in play has valuation >= t, elimination
 * subtracts multiples whose entries keep valuation >= t; pivot valuations
 * are therefore nondecreasing and the resulting triangular-with-permutation
 * shape realizes the module as a direct sum of theta^{t_i} R summands, so
 * profile[t] = #pivots of valuation t is the invariant parameter tuple.
 */
struct ThetaEchelon {
    i64 n = 0;
    int s = 1;
    std::vector<RVec> rows;                         // pivot order
    std::vector<std::pair<std::size_t, int>> pivots;  // (column, valuation)
    std::vector<i64> profile;                       // k_0 .. k_{s-1}
    i64 qdim = 0;                                   // sum_t (s - t) k_t
};

inline ThetaEchelon theta_echelon(const ChainRingCtx& R, std::vector<RVec> rows) {
    ThetaEchelon E;
    E.s = R.spec.s;
    E.profile.assign(static_cast<std::size_t>(R.spec.s), 0);
    if (rows.empty()) return E;
    E.n = static_cast<i64>(rows[0].size());
    for (const RVec& row : rows)
        if (static_cast<i64>(row.size()) != E.n)
            throw std::invalid_argument("theta_echelon: ragged rows");
    std::vector<char> pivoted(static_cast<std::size_t>(E.n), 0);
    while (!rows.empty()) {
        // global minimal-valuation pivot search
        int best_val = R.spec.s;
        std::size_t best_row = 0, best_col = 0;
        bool found = false;
        for (std::size_t col = 0; col < static_cast<std::size_t>(E.n); ++col) {
            if (pivoted[col]) continue;
            for (std::size_t ri = 0; ri < rows.size(); ++ri) {
                const int v = r_valuation(R, rows[ri][col]);
                if (v < best_val) {
                    best_val = v;
                    best_col = col;
                    best_row = ri;
                    found = true;
                }
            }
            if (found && best_val == 0) break;  // cannot improve further at this column order
        }
        if (!found || best_val >= R.spec.s) break;
        RVec pivot = std::move(rows[best_row]);
        rows.erase(rows.begin() + static_cast<long>(best_row));
        // normalize: entry becomes exactly theta^t
        const RElem unit = r_theta_shift_down(R, pivot[best_col], best_val);
        pivot = rv_scale(R, r_inv(R, unit), pivot);
        // eliminate below (remaining rows: valuation >= t in unpivoted cols)
        for (RVec& row : rows) {
            const RElem lam = r_theta_shift_down(R, row[best_col], best_val);
            if (!r_is_zero(R, lam)) row = rv_sub(R, row, rv_scale(R, lam, pivot));
        }
        // reduce above modulo theta^t (canonical standard form)
        for (RVec& prev : E.rows) {
            const RElem high = r_theta_split(R, prev[best_col], best_val).second;
            if (!r_is_zero(R, high)) prev = rv_sub(R, prev, rv_scale(R, high, pivot));
        }
        pivoted[best_col] = 1;
        E.rows.push_back(std::move(pivot));
        E.pivots.emplace_back(best_col, best_val);
        E.profile[static_cast<std::size_t>(best_val)] += 1;
    }
    for (int t = 0; t < R.spec.s; ++t)
        E.qdim += static_cast<i64>(R.spec.s - t) * E.profile[static_cast<std::size_t>(t)];
    return E;
}

/** Is v in the row module? (reduce along pivots; member iff residual is 0) */
inline bool echelon_contains(const ChainRingCtx& R, const ThetaEchelon& E, RVec v) {
    if (E.n > 0 && static_cast<i64>(v.size()) != E.n)
        throw std::invalid_argument("echelon_contains: length mismatch");
    for (std::size_t k = 0; k < E.rows.size(); ++k) {
        const auto [col, t] = E.pivots[k];
        const RElem& x = v[col];
        if (r_is_zero(R, x)) continue;
        if (r_valuation(R, x) < t) return false;
        v = rv_sub(R, v, rv_scale(R, r_theta_shift_down(R, x, t), E.rows[k]));
    }
    return rv_is_zero(R, v);
}

/** Module equality via profiles plus mutual containment. */
inline bool echelon_equal(const ChainRingCtx& R, const ThetaEchelon& A, const ThetaEchelon& B) {
    if (A.profile != B.profile) return false;
    for (const RVec& row : A.rows)
        if (!echelon_contains(R, B, row)) return false;
    for (const RVec& row : B.rows)
        if (!echelon_contains(R, A, row)) return false;
    return true;
}

}  // namespace hullcodes
