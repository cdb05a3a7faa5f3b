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
 * @file grarith.hpp
 * @brief Finite fields F_{p^r}, their extensions, Galois rings GR(p^a, r),
 *        Hensel lifting, and the coset-indexed factorization of X^n - 1.
 *
 * Construction tower:
 *
 *   F_p              integers mod p
 *   F_q = F_p[x]/(f) f = lexicographically first monic *primitive* polynomial
 *                    of degree r (so the class of x generates the unit group;
 *                    for r = 1 this is x - g with g the least primitive root)
 *   F_{q^m}          F_q[y]/(h), h = first monic irreducible of degree m in
 *                    index order (coefficient tuples read as base-q digits)
 *   GR(p^a, r)       Z_{p^a}[x]/(f~), f~ = the Hensel lift of f dividing
 *                    X^{q-1} - 1, so the class of x is a Teichmuller
 *                    generator of order q - 1
 *
 * On top of the tower:
 *   - field_factor_xn1:  X^n - 1 = prod of coset minimal polynomials over F_q
 *     (roots alpha^z computed in F_{q^m}, m = ord_n(q), coefficients verified
 *     to lie in the base field),
 *   - gr_factor_xn1:     the unique monic lift of that factorization to
 *     GR(p^a, r) via quadratic multi-factor Hensel lifting,
 *   - omega:             A (a union of q-cosets mod n) |-> prod of the lifted
 *     factors touching A, the monic divisor of X^n - 1 with root set
 *     { delta^z : z in A },
 *   - omega_roots_crosscheck: recompute omega literally as prod (X - delta^z)
 *     inside the big ring GR(p^a, r*m) and compare with the embedded Hensel
 *     route, certifying along the way that every coefficient is fixed by
 *     sigma^r (i.e. recognizably lies in the small ring).
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hullcodes/cosetlab.hpp"

namespace hullcodes {

using u128 = unsigned __int128;

/** b^e as a 128-bit integer; throws on overflow past 2^126. */
inline u128 ipow128(i64 b, i64 e) {
    if (b < 0 || e < 0) throw std::invalid_argument("ipow128: negative input");
    u128 acc = 1;
    const u128 limit = static_cast<u128>(1) << 126;
    for (i64 i = 0; i < e; ++i) {
        if (acc > limit / static_cast<u128>(b == 0 ? 1 : b))
            throw std::overflow_error("ipow128: result exceeds 2^126");
        acc *= static_cast<u128>(b);
    }
    return acc;
}

/** b^e as i64; throws if the result does not fit in 62 bits. */
inline i64 ipow64(i64 b, i64 e) {
    u128 v = ipow128(b, e);
    if (v > (static_cast<u128>(1) << 62)) throw std::overflow_error("ipow64: result exceeds 2^62");
    return static_cast<i64>(v);
}

/* ======================================================================== */
/* generic dense polynomial machinery                                       */
/*                                                                          */
/* A coefficient domain is described by an adapter with a nested Elem type  */
/* and methods zero/one/is_zero/eq/add/sub/neg/mul (+ inv for units where a */
/* function needs it).  Polynomials are little-endian coefficient vectors,  */
/* trimmed: no trailing zeros, the zero polynomial is the empty vector.     */
/* ======================================================================== */

template <class Ops>
using Poly = std::vector<typename Ops::Elem>;

template <class Ops>
inline void poly_trim(const Ops& K, Poly<Ops>& f) {
    while (!f.empty() && K.is_zero(f.back())) f.pop_back();
}

template <class Ops>
inline int poly_deg(const Poly<Ops>& f) {
    return static_cast<int>(f.size()) - 1;  // -1 for the zero polynomial
}

template <class Ops>
inline bool poly_eq(const Ops& K, const Poly<Ops>& a, const Poly<Ops>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!K.eq(a[i], b[i])) return false;
    return true;
}

template <class Ops>
inline Poly<Ops> poly_one(const Ops& K) {
    return Poly<Ops>{K.one()};
}

/** X^n - 1 (n >= 1). */
template <class Ops>
inline Poly<Ops> poly_xn_minus_1(const Ops& K, i64 n) {
    if (n < 1) throw std::invalid_argument("poly_xn_minus_1: n must be >= 1");
    Poly<Ops> f(static_cast<std::size_t>(n) + 1, K.zero());
    f[0] = K.neg(K.one());
    f.back() = K.one();
    return f;
}

template <class Ops>
inline Poly<Ops> poly_add(const Ops& K, const Poly<Ops>& a, const Poly<Ops>& b) {
    Poly<Ops> c(std::max(a.size(), b.size()), K.zero());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = K.add(c[i], b[i]);
    poly_trim(K, c);
    return c;
}

template <class Ops>
inline Poly<Ops> poly_sub(const Ops& K, const Poly<Ops>& a, const Poly<Ops>& b) {
    Poly<Ops> c(std::max(a.size(), b.size()), K.zero());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = K.sub(c[i], b[i]);
    poly_trim(K, c);
    return c;
}

template <class Ops>
inline Poly<Ops> poly_scale(const Ops& K, const typename Ops::Elem& c, const Poly<Ops>& f) {
    Poly<Ops> g;
    g.reserve(f.size());
    for (const auto& e : f) g.push_back(K.mul(c, e));
    poly_trim(K, g);
    return g;
}

template <class Ops>
inline Poly<Ops> poly_mul(const Ops& K, const Poly<Ops>& a, const Poly<Ops>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<Ops> c(a.size() + b.size() - 1, K.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (K.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = K.add(c[i + j], K.mul(a[i], b[j]));
    }
    poly_trim(K, c);
    return c;
}

/** Quotient and remainder; the divisor's leading coefficient must be a unit. */
template <class Ops>
inline std::pair<Poly<Ops>, Poly<Ops>> poly_divmod(const Ops& K, const Poly<Ops>& a,
                                                   const Poly<Ops>& b) {
    if (b.empty()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    Poly<Ops> rem = a;
    poly_trim(K, rem);
    if (rem.size() < b.size()) return {{}, rem};
    const auto lead_inv = K.inv(b.back());
    Poly<Ops> quot(rem.size() - b.size() + 1, K.zero());
    for (std::size_t qi = quot.size(); qi-- > 0;) {
        const auto c = K.mul(rem[qi + b.size() - 1], lead_inv);
        if (!K.is_zero(c)) {
            quot[qi] = c;
            for (std::size_t j = 0; j < b.size(); ++j)
                rem[qi + j] = K.sub(rem[qi + j], K.mul(c, b[j]));
        }
        if (qi == 0) break;
    }
    poly_trim(K, rem);
    poly_trim(K, quot);
    return {quot, rem};
}

template <class Ops>
inline Poly<Ops> poly_mod(const Ops& K, const Poly<Ops>& a, const Poly<Ops>& b) {
    return poly_divmod(K, a, b).second;
}

template <class Ops>
inline Poly<Ops> poly_mulmod(const Ops& K, const Poly<Ops>& a, const Poly<Ops>& b,
                             const Poly<Ops>& m) {
    return poly_mod(K, poly_mul(K, a, b), m);
}

template <class Ops>
inline Poly<Ops> poly_powmod(const Ops& K, Poly<Ops> base, u128 e, const Poly<Ops>& m) {
    Poly<Ops> acc = poly_mod(K, poly_one(K), m);
    base = poly_mod(K, base, m);
    while (e > 0) {
        if (e & 1) acc = poly_mulmod(K, acc, base, m);
        base = poly_mulmod(K, base, base, m);
        e >>= 1;
    }
    return acc;
}

template <class Ops>
inline typename Ops::Elem poly_eval(const Ops& K, const Poly<Ops>& f,
                                    const typename Ops::Elem& x) {
    auto acc = K.zero();
    for (std::size_t i = f.size(); i-- > 0;) {
        acc = K.add(K.mul(acc, x), f[i]);
        if (i == 0) break;
    }
    return acc;
}

template <class Ops>
inline bool poly_is_monic(const Ops& K, const Poly<Ops>& f) {
    return !f.empty() && K.eq(f.back(), K.one());
}

template <class Ops>
inline Poly<Ops> poly_make_monic(const Ops& K, const Poly<Ops>& f) {
    if (f.empty()) return f;
    return poly_scale(K, K.inv(f.back()), f);
}

/** Monic gcd over a field. */
template <class Ops>
inline Poly<Ops> poly_gcd(const Ops& K, Poly<Ops> a, Poly<Ops> b) {
    while (!b.empty()) {
        Poly<Ops> r = poly_mod(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_make_monic(K, a);
}

/** Extended gcd over a field: returns (g, u, v), g monic, u a + v b = g. */
template <class Ops>
inline std::tuple<Poly<Ops>, Poly<Ops>, Poly<Ops>> poly_ext_gcd(const Ops& K, Poly<Ops> a,
                                                                Poly<Ops> b) {
    Poly<Ops> u0 = poly_one(K), v0 = {}, u1 = {}, v1 = poly_one(K);
    while (!b.empty()) {
        auto [q, r] = poly_divmod(K, a, b);
        a = std::move(b);
        b = std::move(r);
        Poly<Ops> u2 = poly_sub(K, u0, poly_mul(K, q, u1));
        Poly<Ops> v2 = poly_sub(K, v0, poly_mul(K, q, v1));
        u0 = std::move(u1);
        v0 = std::move(v1);
        u1 = std::move(u2);
        v1 = std::move(v2);
    }
    if (a.empty()) return {a, u0, v0};
    const auto inv = K.inv(a.back());
    return {poly_scale(K, inv, a), poly_scale(K, inv, u0), poly_scale(K, inv, v0)};
}

/* ======================================================================== */
/* scalar coefficient adapter: integers modulo M                            */
/* ======================================================================== */

/** Integers modulo M (M prime or a prime power); inv is defined on units. */
struct ZmodOps {
    i64 M;
    using Elem = i64;
    Elem zero() const { return 0; }
    Elem one() const { return 1 % M; }
    bool is_zero(Elem e) const { return e == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem add(Elem a, Elem b) const { return (a + b) % M; }
    Elem sub(Elem a, Elem b) const { return mod_floor(a - b, M); }
    Elem neg(Elem a) const { return mod_floor(-a, M); }
    Elem mul(Elem a, Elem b) const { return mul_mod(a, b, M); }
    Elem inv(Elem a) const {
        i64 old_r = mod_floor(a, M), r = M, old_s = 1, s = 0;
        while (r != 0) {
            const i64 qq = old_r / r;
            old_r -= qq * r;
            std::swap(old_r, r);
            old_s -= qq * s;
            std::swap(old_s, s);
        }
        if (old_r != 1) throw std::invalid_argument("ZmodOps::inv: not a unit");
        return mod_floor(old_s, M);
    }
};

using ZPoly = Poly<ZmodOps>;

/* ======================================================================== */
/* base fields F_q = F_p[x]/(f)                                             */
/* ======================================================================== */

/** Description of F_q = F_p[x]/(f) with f monic primitive of degree r. */
struct FieldCtx {
    i64 p = 2;
    int r = 1;
    i64 q = 2;                  // p^r
    std::vector<i64> modulus;   // size r + 1, coefficients in [0, p), monic
};

/** Elements of F_q: coefficient vectors of length r over [0, p). */
using FElem = std::vector<i64>;

inline FElem f_zero(const FieldCtx& F) { return FElem(static_cast<std::size_t>(F.r), 0); }

inline FElem f_one(const FieldCtx& F) {
    FElem e = f_zero(F);
    e[0] = 1 % F.p;
    return e;
}

inline FElem f_from_int(const FieldCtx& F, i64 c) {
    FElem e = f_zero(F);
    e[0] = mod_floor(c, F.p);
    return e;
}

inline bool f_is_zero(const FieldCtx&, const FElem& x) {
    for (i64 c : x)
        if (c != 0) return false;
    return true;
}

inline bool f_eq(const FieldCtx&, const FElem& a, const FElem& b) { return a == b; }

inline FElem f_add(const FieldCtx& F, const FElem& a, const FElem& b) {
    FElem c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + b[i]) % F.p;
    return c;
}

inline FElem f_sub(const FieldCtx& F, const FElem& a, const FElem& b) {
    FElem c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_floor(c[i] - b[i], F.p);
    return c;
}

inline FElem f_neg(const FieldCtx& F, const FElem& a) {
    FElem c(a);
    for (auto& v : c) v = mod_floor(-v, F.p);
    return c;
}

inline FElem f_mul(const FieldCtx& F, const FElem& a, const FElem& b) {
    const std::size_t r = static_cast<std::size_t>(F.r);
    std::vector<i64> prod(2 * r - 1, 0);
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % F.p;
    }
    for (std::size_t i = prod.size(); i-- > r;) {
        const i64 c = prod[i];
        if (c != 0) {
            for (std::size_t j = 0; j < r; ++j)
                prod[i - r + j] = mod_floor(prod[i - r + j] - c * F.modulus[j], F.p);
        }
    }
    prod.resize(r);
    return prod;
}

inline FElem f_pow(const FieldCtx& F, FElem x, u128 e) {
    FElem acc = f_one(F);
    while (e > 0) {
        if (e & 1) acc = f_mul(F, acc, x);
        x = f_mul(F, x, x);
        e >>= 1;
    }
    return acc;
}

inline FElem f_inv(const FieldCtx& F, const FElem& x) {
    if (f_is_zero(F, x)) throw std::invalid_argument("f_inv: zero has no inverse");
    return f_pow(F, x, static_cast<u128>(F.q - 2));
}

/** Enumeration index of x: its coefficient vector read as base-p digits. */
inline i64 f_index(const FieldCtx& F, const FElem& x) {
    i64 idx = 0;
    for (std::size_t i = x.size(); i-- > 0;) {
        idx = idx * F.p + x[i];
        if (i == 0) break;
    }
    return idx;
}

inline FElem f_from_index(const FieldCtx& F, i64 idx) {
    if (idx < 0 || idx >= F.q) throw std::invalid_argument("f_from_index: index out of range");
    FElem x = f_zero(F);
    for (int i = 0; i < F.r; ++i) {
        x[static_cast<std::size_t>(i)] = idx % F.p;
        idx /= F.p;
    }
    return x;
}

/** Coefficient adapter for F_q. */
struct FOps {
    const FieldCtx* F;
    using Elem = FElem;
    Elem zero() const { return f_zero(*F); }
    Elem one() const { return f_one(*F); }
    bool is_zero(const Elem& e) const { return f_is_zero(*F, e); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return f_add(*F, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return f_sub(*F, a, b); }
    Elem neg(const Elem& a) const { return f_neg(*F, a); }
    Elem mul(const Elem& a, const Elem& b) const { return f_mul(*F, a, b); }
    Elem inv(const Elem& a) const { return f_inv(*F, a); }
};

using FPoly = Poly<FOps>;

/* ------------------------------------------------------------------------ */
/* irreducibility / primitivity over F_p (scalar polynomials)                */
/* ------------------------------------------------------------------------ */

/** Rabin's test: is the monic f (degree d >= 1) irreducible over F_p? */
inline bool zpoly_irreducible(i64 p, const ZPoly& f) {
    const ZmodOps K{p};
    const int d = poly_deg<ZmodOps>(f);
    if (d < 1) return false;
    const ZPoly X{0, 1};
    ZPoly xq = poly_powmod(K, X, ipow128(p, d), f);
    if (!poly_eq(K, xq, poly_mod(K, X, f))) return false;
    for (i64 P : prime_factors(d)) {
        ZPoly xr = poly_powmod(K, X, ipow128(p, d / P), f);
        ZPoly g = poly_gcd(K, poly_sub(K, xr, X), f);
        if (poly_deg<ZmodOps>(g) != 0) return false;
    }
    return true;
}

/** Does the class of X in F_p[X]/(f) have multiplicative order p^deg(f) - 1? */
inline bool zpoly_primitive(i64 p, const ZPoly& f) {
    const ZmodOps K{p};
    const int d = poly_deg<ZmodOps>(f);
    const i64 order = ipow64(p, d) - 1;
    const ZPoly X{0, 1};
    if (!poly_eq(K, poly_powmod(K, X, static_cast<u128>(order), f), poly_one(K))) return false;
    for (i64 P : prime_factors(order)) {
        if (poly_eq(K, poly_powmod(K, X, static_cast<u128>(order / P), f), poly_one(K)))
            return false;
    }
    return true;
}

/** Least primitive root modulo a prime p (1 for p = 2). */
inline i64 smallest_primitive_root(i64 p) {
    if (!is_prime(p)) throw std::invalid_argument("smallest_primitive_root: p must be prime");
    if (p == 2) return 1;
    for (i64 g = 2; g < p; ++g) {
        if (mult_order(g, p) == p - 1) return g;
    }
    throw std::logic_error("smallest_primitive_root: none found");  // unreachable
}

/**
 * F_{p^r} with the first (by coefficient tuples read as base-p digits of an
 * increasing index) monic primitive modulus of degree r.
 */
inline FieldCtx make_field(i64 p, int r) {
    if (!is_prime(p)) throw std::invalid_argument("make_field: p must be prime");
    if (r < 1) throw std::invalid_argument("make_field: r must be >= 1");
    FieldCtx F;
    F.p = p;
    F.r = r;
    F.q = ipow64(p, r);
    if (r == 1) {
        const i64 g = smallest_primitive_root(p);
        F.modulus = {mod_floor(-g, p), 1};
        return F;
    }
    const i64 total = F.q;
    for (i64 k = 0; k < total; ++k) {
        ZPoly f(static_cast<std::size_t>(r) + 1, 0);
        i64 t = k;
        for (int i = 0; i < r; ++i) {
            f[static_cast<std::size_t>(i)] = t % p;
            t /= p;
        }
        f[static_cast<std::size_t>(r)] = 1;
        if (zpoly_irreducible(p, f) && zpoly_primitive(p, f)) {
            F.modulus = f;
            return F;
        }
    }
    throw std::logic_error("make_field: no primitive polynomial found");  // unreachable
}

/* ======================================================================== */
/* extension fields F_{q^m} = F_q[y]/(h)                                    */
/* ======================================================================== */

struct ExtFieldCtx {
    FieldCtx base;
    int m = 1;
    u128 order = 2;   // q^m
    FPoly modulus;    // monic irreducible of degree m over F_q
};

/** Elements of F_{q^m}: vectors of m base-field coefficients. */
using EElem = std::vector<FElem>;

inline EElem e_zero(const ExtFieldCtx& E) {
    return EElem(static_cast<std::size_t>(E.m), f_zero(E.base));
}

inline EElem e_one(const ExtFieldCtx& E) {
    EElem e = e_zero(E);
    e[0] = f_one(E.base);
    return e;
}

inline EElem e_from_base(const ExtFieldCtx& E, const FElem& c) {
    EElem e = e_zero(E);
    e[0] = c;
    return e;
}

inline bool e_is_zero(const ExtFieldCtx& E, const EElem& x) {
    for (const auto& c : x)
        if (!f_is_zero(E.base, c)) return false;
    return true;
}

inline bool e_eq(const ExtFieldCtx&, const EElem& a, const EElem& b) { return a == b; }

/** True iff x lies in the base field (all y-coordinates above 0 vanish). */
inline bool e_in_base(const ExtFieldCtx& E, const EElem& x) {
    for (std::size_t i = 1; i < x.size(); ++i)
        if (!f_is_zero(E.base, x[i])) return false;
    return true;
}

inline EElem e_add(const ExtFieldCtx& E, const EElem& a, const EElem& b) {
    EElem c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f_add(E.base, c[i], b[i]);
    return c;
}

inline EElem e_sub(const ExtFieldCtx& E, const EElem& a, const EElem& b) {
    EElem c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f_sub(E.base, c[i], b[i]);
    return c;
}

inline EElem e_neg(const ExtFieldCtx& E, const EElem& a) {
    EElem c(a);
    for (auto& v : c) v = f_neg(E.base, v);
    return c;
}

inline EElem e_mul(const ExtFieldCtx& E, const EElem& a, const EElem& b) {
    const std::size_t m = static_cast<std::size_t>(E.m);
    EElem prod(2 * m - 1, f_zero(E.base));
    for (std::size_t i = 0; i < m; ++i) {
        if (f_is_zero(E.base, a[i])) continue;
        for (std::size_t j = 0; j < m; ++j)
            prod[i + j] = f_add(E.base, prod[i + j], f_mul(E.base, a[i], b[j]));
    }
    for (std::size_t i = prod.size(); i-- > m;) {
        if (!f_is_zero(E.base, prod[i])) {
            for (std::size_t j = 0; j < m; ++j)
                prod[i - m + j] =
                    f_sub(E.base, prod[i - m + j], f_mul(E.base, prod[i], E.modulus[j]));
        }
    }
    prod.resize(m);
    return prod;
}

inline EElem e_pow(const ExtFieldCtx& E, EElem x, u128 e) {
    EElem acc = e_one(E);
    while (e > 0) {
        if (e & 1) acc = e_mul(E, acc, x);
        x = e_mul(E, x, x);
        e >>= 1;
    }
    return acc;
}

/** Element with enumeration index idx (coefficients = base-q digits). */
inline EElem e_from_index(const ExtFieldCtx& E, u128 idx) {
    EElem x = e_zero(E);
    for (int i = 0; i < E.m; ++i) {
        x[static_cast<std::size_t>(i)] =
            f_from_index(E.base, static_cast<i64>(idx % static_cast<u128>(E.base.q)));
        idx /= static_cast<u128>(E.base.q);
    }
    return x;
}

/**
 * F_{q^m} with the first monic irreducible modulus of degree m in index
 * order, found by Rabin's test over F_q.
 */
inline ExtFieldCtx make_extension(const FieldCtx& F, int m) {
    if (m < 1) throw std::invalid_argument("make_extension: m must be >= 1");
    ExtFieldCtx E;
    E.base = F;
    E.m = m;
    E.order = ipow128(F.q, m);
    const FOps K{&E.base};
    const FPoly Y{f_zero(F), f_one(F)};
    for (u128 k = 0; k < ipow128(F.q, m); ++k) {
        FPoly h(static_cast<std::size_t>(m) + 1, f_zero(F));
        u128 t = k;
        for (int i = 0; i < m; ++i) {
            h[static_cast<std::size_t>(i)] =
                f_from_index(F, static_cast<i64>(t % static_cast<u128>(F.q)));
            t /= static_cast<u128>(F.q);
        }
        h[static_cast<std::size_t>(m)] = f_one(F);
        // Rabin: y^{q^m} = y mod h and gcd(y^{q^{m/P}} - y, h) = 1 for P | m.
        FPoly yq = poly_powmod(K, Y, ipow128(F.q, m), h);
        if (!poly_eq(K, yq, poly_mod(K, Y, h))) continue;
        bool ok = true;
        for (i64 P : prime_factors(m)) {
            FPoly yr = poly_powmod(K, Y, ipow128(F.q, m / P), h);
            if (poly_deg<FOps>(poly_gcd(K, poly_sub(K, yr, Y), h)) != 0) {
                ok = false;
                break;
            }
        }
        if (ok) {
            E.modulus = h;
            return E;
        }
    }
    throw std::logic_error("make_extension: no irreducible polynomial found");  // unreachable
}

/**
 * A fixed element of multiplicative order exactly n in F_{q^m} (requires
 * n | q^m - 1): the first nonzero candidate c in index order for which
 * c^{(q^m-1)/n} passes the order-n certificate.
 */
inline EElem primitive_nth_root(const ExtFieldCtx& E, i64 n) {
    if (n < 1) throw std::invalid_argument("primitive_nth_root: n must be >= 1");
    const u128 group = E.order - 1;
    if (group % static_cast<u128>(n) != 0)
        throw std::invalid_argument("primitive_nth_root: n does not divide q^m - 1");
    const u128 exp = group / static_cast<u128>(n);
    const std::vector<i64> ps = prime_factors(n);
    for (u128 idx = 1; idx < E.order; ++idx) {
        EElem alpha = e_pow(E, e_from_index(E, idx), exp);
        if (e_is_zero(E, alpha)) continue;
        bool ok = e_eq(E, e_pow(E, alpha, static_cast<u128>(n)), e_one(E));
        for (i64 P : ps) {
            if (!ok) break;
            if (e_eq(E, e_pow(E, alpha, static_cast<u128>(n / P)), e_one(E))) ok = false;
        }
        if (ok) return alpha;
    }
    throw std::logic_error("primitive_nth_root: no element of order n");  // unreachable
}

/* ------------------------------------------------------------------------ */
/* factorization of X^n - 1 over F_q by cyclotomic cosets                    */
/* ------------------------------------------------------------------------ */

/**
 * X^n - 1 = prod_i factors[i] over F_q, where factors[i] is the minimal
 * polynomial prod_{w in atlas.cosets[i]} (X - alpha^w) of the i-th coset.
 */
struct FieldFactorTable {
    FieldCtx field;
    i64 n = 1;
    int ext_degree = 1;  // m = ord_n(q)
    CosetAtlas atlas;
    std::vector<FPoly> factors;
};

inline FieldFactorTable field_factor_xn1(const FieldCtx& F, i64 n) {
    FieldFactorTable T;
    T.field = F;
    T.n = n;
    T.atlas = build_atlas(n, F.q);
    T.ext_degree = static_cast<int>(mult_order(F.q, n));
    const ExtFieldCtx E = make_extension(F, T.ext_degree);
    const EElem alpha = primitive_nth_root(E, n);
    // alpha^w for w = 0..n-1
    std::vector<EElem> pw(static_cast<std::size_t>(n), e_one(E));
    for (i64 w = 1; w < n; ++w)
        pw[static_cast<std::size_t>(w)] = e_mul(E, pw[static_cast<std::size_t>(w - 1)], alpha);

    struct EOpsLocal {
        const ExtFieldCtx* E;
        using Elem = EElem;
        Elem zero() const { return e_zero(*E); }
        Elem one() const { return e_one(*E); }
        bool is_zero(const Elem& e) const { return e_is_zero(*E, e); }
        bool eq(const Elem& a, const Elem& b) const { return a == b; }
        Elem add(const Elem& a, const Elem& b) const { return e_add(*E, a, b); }
        Elem sub(const Elem& a, const Elem& b) const { return e_sub(*E, a, b); }
        Elem neg(const Elem& a) const { return e_neg(*E, a); }
        Elem mul(const Elem& a, const Elem& b) const { return e_mul(*E, a, b); }
        Elem inv(const Elem&) const { throw std::logic_error("EOpsLocal::inv unused"); }
    };
    const EOpsLocal KE{&E};

    for (const Coset& c : T.atlas.cosets) {
        Poly<EOpsLocal> f = poly_one(KE);
        for (i64 w : c.elems) {
            Poly<EOpsLocal> lin{e_neg(E, pw[static_cast<std::size_t>(w)]), e_one(E)};
            f = poly_mul(KE, f, lin);
        }
        FPoly proj;
        proj.reserve(f.size());
        for (const EElem& coeff : f) {
            if (!e_in_base(E, coeff))
                throw std::logic_error("field_factor_xn1: coefficient escapes the base field");
            proj.push_back(coeff[0]);
        }
        T.factors.push_back(std::move(proj));
    }
    // certify the factorization
    const FOps K{&T.field};
    FPoly prod = poly_one(K);
    for (const FPoly& f : T.factors) prod = poly_mul(K, prod, f);
    if (!poly_eq(K, prod, poly_xn_minus_1(K, n)))
        throw std::logic_error("field_factor_xn1: factor product is not X^n - 1");
    return T;
}

/* ======================================================================== */
/* Galois rings GR(p^a, r)                                                  */
/* ======================================================================== */

/**
 * GR(p^a, r) = Z_{p^a}[x]/(f~): residue field F_q (q = p^r), maximal ideal
 * (p), f~ the Hensel lift of the field modulus dividing X^{q-1} - 1.
 */
struct GaloisRingCtx {
    i64 p = 2;
    int a = 1;
    int r = 1;
    i64 pa = 2;                 // p^a
    i64 q = 2;                  // p^r
    FieldCtx residue;
    std::vector<i64> modulus;   // size r + 1, coefficients in [0, p^a), monic
};

/** Elements of GR(p^a, r): coefficient vectors of length r over [0, p^a). */
using GRElem = std::vector<i64>;

inline GRElem gr_zero(const GaloisRingCtx& R) { return GRElem(static_cast<std::size_t>(R.r), 0); }

inline GRElem gr_one(const GaloisRingCtx& R) {
    GRElem e = gr_zero(R);
    e[0] = 1 % R.pa;
    return e;
}

inline GRElem gr_from_int(const GaloisRingCtx& R, i64 c) {
    GRElem e = gr_zero(R);
    e[0] = mod_floor(c, R.pa);
    return e;
}

inline bool gr_is_zero(const GaloisRingCtx&, const GRElem& x) {
    for (i64 c : x)
        if (c != 0) return false;
    return true;
}

inline GRElem gr_add(const GaloisRingCtx& R, const GRElem& a, const GRElem& b) {
    GRElem c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + b[i]) % R.pa;
    return c;
}

inline GRElem gr_sub(const GaloisRingCtx& R, const GRElem& a, const GRElem& b) {
    GRElem c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_floor(c[i] - b[i], R.pa);
    return c;
}

inline GRElem gr_neg(const GaloisRingCtx& R, const GRElem& a) {
    GRElem c(a);
    for (auto& v : c) v = mod_floor(-v, R.pa);
    return c;
}

inline GRElem gr_scale(const GaloisRingCtx& R, i64 c, const GRElem& a) {
    GRElem out(a);
    c = mod_floor(c, R.pa);
    for (auto& v : out) v = mul_mod(v, c, R.pa);
    return out;
}

inline GRElem gr_mul(const GaloisRingCtx& R, const GRElem& a, const GRElem& b) {
    const std::size_t r = static_cast<std::size_t>(R.r);
    std::vector<i64> prod(2 * r - 1, 0);
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < r; ++j)
            prod[i + j] = (prod[i + j] + mul_mod(a[i], b[j], R.pa)) % R.pa;
    }
    for (std::size_t i = prod.size(); i-- > r;) {
        const i64 c = prod[i];
        if (c != 0) {
            for (std::size_t j = 0; j < r; ++j)
                prod[i - r + j] = mod_floor(prod[i - r + j] - mul_mod(c, R.modulus[j], R.pa), R.pa);
        }
    }
    prod.resize(r);
    return prod;
}

inline GRElem gr_pow(const GaloisRingCtx& R, GRElem x, u128 e) {
    GRElem acc = gr_one(R);
    while (e > 0) {
        if (e & 1) acc = gr_mul(R, acc, x);
        x = gr_mul(R, x, x);
        e >>= 1;
    }
    return acc;
}

/** Reduction mod p onto the residue field. */
inline FElem gr_pi(const GaloisRingCtx& R, const GRElem& x) {
    FElem y(x.begin(), x.end());
    for (auto& v : y) v %= R.p;
    return y;
}

/** Coefficientwise lift F_q -> GR(p^a, r) (a set-section of gr_pi). */
inline GRElem gr_lift(const GaloisRingCtx&, const FElem& x) { return GRElem(x.begin(), x.end()); }

inline bool gr_is_unit(const GaloisRingCtx& R, const GRElem& x) {
    return !f_is_zero(R.residue, gr_pi(R, x));
}

/** Inverse of a unit by Newton iteration from the residue-field inverse. */
inline GRElem gr_inv(const GaloisRingCtx& R, const GRElem& x) {
    if (!gr_is_unit(R, x)) throw std::invalid_argument("gr_inv: not a unit");
    GRElem y = gr_lift(R, f_inv(R.residue, gr_pi(R, x)));
    const GRElem two = gr_from_int(R, 2);
    for (int prec = 1; prec < R.a; prec *= 2)
        y = gr_mul(R, y, gr_sub(R, two, gr_mul(R, x, y)));
    if (!gr_is_zero(R, gr_sub(R, gr_mul(R, x, y), gr_one(R))))
        throw std::logic_error("gr_inv: Newton iteration failed");
    return y;
}

/** Teichmuller representative congruent to x mod p: x^{q^{a-1}}. */
inline GRElem gr_teichmuller(const GaloisRingCtx& R, const GRElem& x) {
    return gr_pow(R, x, ipow128(R.q, R.a - 1));
}

/** p-adic digits of x with respect to the Teichmuller set (length a). */
inline std::vector<GRElem> gr_teich_digits(const GaloisRingCtx& R, GRElem x) {
    std::vector<GRElem> digits;
    digits.reserve(static_cast<std::size_t>(R.a));
    for (int t = 0; t < R.a; ++t) {
        GRElem d = gr_teichmuller(R, x);
        digits.push_back(d);
        GRElem rem = gr_sub(R, x, d);
        for (auto& v : rem) {
            if (v % R.p != 0) throw std::logic_error("gr_teich_digits: digit mismatch");
            v /= R.p;
        }
        x = std::move(rem);
    }
    return digits;
}

/** Frobenius sigma: acts as d |-> d^p on every Teichmuller digit. */
inline GRElem gr_frobenius(const GaloisRingCtx& R, const GRElem& x) {
    const std::vector<GRElem> digits = gr_teich_digits(R, x);
    GRElem acc = gr_zero(R);
    i64 pt = 1;
    for (int t = 0; t < R.a; ++t) {
        acc = gr_add(R, acc, gr_scale(R, pt, gr_pow(R, digits[static_cast<std::size_t>(t)],
                                                    static_cast<u128>(R.p))));
        pt *= R.p;
    }
    return acc;
}

inline GRElem gr_sigma_iter(const GaloisRingCtx& R, GRElem x, i64 h) {
    h = mod_floor(h, R.r);
    for (i64 i = 0; i < h; ++i) x = gr_frobenius(R, x);
    return x;
}

/** Coefficient adapter for GR(p^a, r); inv is defined on units. */
struct GROps {
    const GaloisRingCtx* R;
    using Elem = GRElem;
    Elem zero() const { return gr_zero(*R); }
    Elem one() const { return gr_one(*R); }
    bool is_zero(const Elem& e) const { return gr_is_zero(*R, e); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return gr_add(*R, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return gr_sub(*R, a, b); }
    Elem neg(const Elem& a) const { return gr_neg(*R, a); }
    Elem mul(const Elem& a, const Elem& b) const { return gr_mul(*R, a, b); }
    Elem inv(const Elem& a) const { return gr_inv(*R, a); }
};

using GRPoly = Poly<GROps>;

/* ------------------------------------------------------------------------ */
/* Hensel lifting                                                            */
/* ------------------------------------------------------------------------ */

/**
 * Quadratic two-factor Hensel lift: F monic over the ring, g0 h0 = pi(F)
 * monic coprime over the residue field.  Maps must provide
 *   shift_down(relem, p^k) -> kelem   ((x / p^k) mod p, asserting p^k | x)
 *   lift_scaled(kelem, p^k) -> relem  (canonical lift times p^k)
 */
template <class ROps, class KOps, class Maps>
inline std::pair<Poly<ROps>, Poly<ROps>> hensel_pair(const ROps& R, const KOps& K,
                                                     const Maps& maps, const Poly<ROps>& F,
                                                     const Poly<KOps>& g0, const Poly<KOps>& h0,
                                                     i64 p, int a) {
    auto [g1, u, v] = poly_ext_gcd(K, g0, h0);
    (void)u;
    if (poly_deg<KOps>(g1) != 0)
        throw std::invalid_argument("hensel_pair: residue factors are not coprime");
    auto lift_poly = [&](const Poly<KOps>& f, i64 pk) {
        Poly<ROps> out;
        out.reserve(f.size());
        for (const auto& c : f) out.push_back(maps.lift_scaled(c, pk));
        poly_trim(R, out);
        return out;
    };
    Poly<ROps> g = lift_poly(g0, 1), h = lift_poly(h0, 1);
    i64 pk = 1;
    for (int k = 1; k < a; ++k) {
        pk *= p;
        Poly<ROps> E = poly_sub(R, F, poly_mul(R, g, h));
        Poly<KOps> Ebar;
        Ebar.reserve(E.size());
        for (const auto& c : E) Ebar.push_back(maps.shift_down(c, pk));
        poly_trim(K, Ebar);
        if (Ebar.empty()) continue;
        Poly<KOps> dg = poly_mod(K, poly_mul(K, v, Ebar), g0);
        auto [dh, rem] = poly_divmod(K, poly_sub(K, Ebar, poly_mul(K, dg, h0)), g0);
        if (!rem.empty()) throw std::logic_error("hensel_pair: correction not divisible");
        g = poly_add(R, g, lift_poly(dg, pk));
        h = poly_add(R, h, lift_poly(dh, pk));
    }
    if (!poly_eq(R, poly_mul(R, g, h), F))
        throw std::logic_error("hensel_pair: lifted product mismatch");
    return {g, h};
}

/** Multi-factor Hensel lift by recursive half splits (residues pairwise coprime). */
template <class ROps, class KOps, class Maps>
inline std::vector<Poly<ROps>> hensel_multi(const ROps& R, const KOps& K, const Maps& maps,
                                            const Poly<ROps>& F,
                                            const std::vector<Poly<KOps>>& residues, i64 p,
                                            int a) {
    if (residues.empty()) throw std::invalid_argument("hensel_multi: no residue factors");
    if (residues.size() == 1) {
        Poly<KOps> red;
        red.reserve(F.size());
        for (const auto& c : F) red.push_back(maps.shift_down(c, 1));
        poly_trim(K, red);
        if (!poly_eq(K, red, residues[0]))
            throw std::logic_error("hensel_multi: leaf residue mismatch");
        return {F};
    }
    const std::size_t half = residues.size() / 2;
    Poly<KOps> left = poly_one(K), right = poly_one(K);
    for (std::size_t i = 0; i < half; ++i) left = poly_mul(K, left, residues[i]);
    for (std::size_t i = half; i < residues.size(); ++i) right = poly_mul(K, right, residues[i]);
    auto [G, H] = hensel_pair(R, K, maps, F, left, right, p, a);
    std::vector<Poly<KOps>> lres(residues.begin(), residues.begin() + static_cast<long>(half));
    std::vector<Poly<KOps>> rres(residues.begin() + static_cast<long>(half), residues.end());
    std::vector<Poly<ROps>> out = hensel_multi(R, K, maps, G, lres, p, a);
    std::vector<Poly<ROps>> out2 = hensel_multi(R, K, maps, H, rres, p, a);
    out.insert(out.end(), out2.begin(), out2.end());
    return out;
}

/** Maps for scalar Hensel lifting Z_{p^a} <-> F_p. */
struct ScalarHenselMaps {
    i64 p, pa;
    i64 shift_down(i64 x, i64 pk) const {
        if (x % pk != 0) throw std::logic_error("hensel: coefficient not divisible by p^k");
        return (x / pk) % p;
    }
    i64 lift_scaled(i64 e, i64 pk) const { return mul_mod(e, pk, pa); }
};

/** Maps for Hensel lifting GR(p^a, r) <-> F_q (coefficientwise scalar maps). */
struct GRHenselMaps {
    const GaloisRingCtx* R;
    FElem shift_down(const GRElem& x, i64 pk) const {
        FElem y(x.begin(), x.end());
        for (auto& v : y) {
            if (v % pk != 0) throw std::logic_error("hensel: coefficient not divisible by p^k");
            v = (v / pk) % R->p;
        }
        return y;
    }
    GRElem lift_scaled(const FElem& e, i64 pk) const {
        GRElem y(e.begin(), e.end());
        for (auto& v : y) v = mul_mod(v, pk, R->pa);
        return y;
    }
};

/**
 * GR(p^a, r).  The modulus is the Hensel lift of the field modulus along
 * X^{q-1} - 1; construction certifies that the class of x has order q - 1.
 */
inline GaloisRingCtx make_galois_ring(i64 p, int a, int r) {
    if (!is_prime(p)) throw std::invalid_argument("make_galois_ring: p must be prime");
    if (a < 1 || r < 1) throw std::invalid_argument("make_galois_ring: a, r must be >= 1");
    GaloisRingCtx R;
    R.p = p;
    R.a = a;
    R.r = r;
    R.pa = ipow64(p, a);
    if (R.pa > (static_cast<i64>(1) << 30))
        throw std::invalid_argument("make_galois_ring: p^a too large");
    R.q = ipow64(p, r);
    R.residue = make_field(p, r);
    if (a == 1) {
        R.modulus = R.residue.modulus;
    } else if (r == 1) {
        // Teichmuller lift of the primitive root: g~ = g^{p^{a-1}} mod p^a.
        const i64 g = mod_floor(-R.residue.modulus[0], p);
        const i64 gt = pow_mod(g, ipow64(p, a - 1), R.pa);
        R.modulus = {mod_floor(-gt, R.pa), 1};
    } else {
        const ZmodOps Zr{R.pa}, Zk{p};
        const ScalarHenselMaps maps{p, R.pa};
        ZPoly F = poly_xn_minus_1(Zr, R.q - 1);
        ZPoly g0 = R.residue.modulus;
        auto [h0, rem] = poly_divmod(Zk, poly_xn_minus_1(Zk, R.q - 1), g0);
        if (!rem.empty()) throw std::logic_error("make_galois_ring: modulus does not divide");
        auto [gl, hl] = hensel_pair(Zr, Zk, maps, F, g0, h0, p, a);
        (void)hl;
        R.modulus = gl;
    }
    // Certify: the class of x is a unit of multiplicative order exactly q - 1.
    if (R.q > 2) {
        GRElem xi = gr_zero(R);
        if (r == 1) {
            xi[0] = mod_floor(-R.modulus[0], R.pa);
        } else {
            xi[1] = 1;
        }
        if (!gr_is_zero(R, gr_sub(R, gr_pow(R, xi, static_cast<u128>(R.q - 1)), gr_one(R))))
            throw std::logic_error("make_galois_ring: x^{q-1} != 1");
        for (i64 P : prime_factors(R.q - 1)) {
            if (gr_is_zero(R, gr_sub(R, gr_pow(R, xi, static_cast<u128>((R.q - 1) / P)), gr_one(R))))
                throw std::logic_error("make_galois_ring: class of x is not primitive");
        }
    }
    return R;
}

/* ------------------------------------------------------------------------ */
/* the coset-indexed factorization of X^n - 1 over GR(p^a, r)                */
/* ------------------------------------------------------------------------ */

/**
 * X^n - 1 = prod_i factors[i] over GR(p^a, r), factors[i] the Hensel lift of
 * the i-th coset's minimal polynomial (atlas order matches field.atlas).
 */
struct GRFactorTable {
    GaloisRingCtx ring;
    i64 n = 1;
    CosetAtlas atlas;
    FieldFactorTable field;
    std::vector<GRPoly> factors;
};

inline GRFactorTable gr_factor_xn1(const GaloisRingCtx& R, i64 n) {
    if (n < 1) throw std::invalid_argument("gr_factor_xn1: n must be >= 1");
    if (n % R.p == 0)
        throw std::invalid_argument("gr_factor_xn1: n must be coprime to p");
    GRFactorTable T;
    T.ring = R;
    T.n = n;
    T.field = field_factor_xn1(R.residue, n);
    T.atlas = T.field.atlas;
    const GROps Kr{&T.ring};
    const FOps Kf{&T.field.field};
    const GRHenselMaps maps{&T.ring};
    GRPoly F = poly_xn_minus_1(Kr, n);
    T.factors = hensel_multi(Kr, Kf, maps, F, T.field.factors, R.p, R.a);
    GRPoly prod = poly_one(Kr);
    for (const GRPoly& f : T.factors) prod = poly_mul(Kr, prod, f);
    if (!poly_eq(Kr, prod, F))
        throw std::logic_error("gr_factor_xn1: factor product is not X^n - 1");
    return T;
}

/** Normalize a residue set mod n: sorted, unique. */
inline std::vector<i64> normalize_residues(i64 n, std::vector<i64> A) {
    for (auto& z : A) z = mod_floor(z, n);
    std::sort(A.begin(), A.end());
    A.erase(std::unique(A.begin(), A.end()), A.end());
    return A;
}

/** Indices (into the atlas) of the cosets whose union is A; throws if A is not a union. */
inline std::vector<std::size_t> coset_indices_of_union(const CosetAtlas& atlas,
                                                       const std::vector<i64>& A) {
    std::vector<i64> norm = normalize_residues(atlas.n, A);
    std::vector<char> seen(atlas.cosets.size(), 0);
    std::vector<std::size_t> idx;
    std::size_t covered = 0;
    for (i64 z : norm) {
        const std::size_t ci = coset_index_of(atlas, z);
        if (!seen[ci]) {
            seen[ci] = 1;
            idx.push_back(ci);
            covered += atlas.cosets[ci].elems.size();
        }
    }
    if (covered != norm.size())
        throw std::invalid_argument("coset_indices_of_union: set is not a union of q-cosets");
    std::sort(idx.begin(), idx.end());
    return idx;
}

/**
 * Omega(A) = prod_{z in A} (X - delta^z): the monic divisor of X^n - 1 over
 * GR(p^a, r) attached to the union of cosets A, computed as the product of
 * the lifted coset factors.  Omega(empty) = 1.
 */
inline GRPoly omega(const GRFactorTable& T, const std::vector<i64>& A) {
    const GROps K{&T.ring};
    GRPoly f = poly_one(K);
    for (std::size_t ci : coset_indices_of_union(T.atlas, A))
        f = poly_mul(K, f, T.factors[ci]);
    return f;
}

/** Complement of A in [0, n) (A validated as a union of cosets by omega). */
inline std::vector<i64> residue_complement(i64 n, const std::vector<i64>& A) {
    std::vector<i64> norm = normalize_residues(n, A);
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (i64 z : norm) in[static_cast<std::size_t>(z)] = 1;
    std::vector<i64> comp;
    for (i64 z = 0; z < n; ++z)
        if (!in[static_cast<std::size_t>(z)]) comp.push_back(z);
    return comp;
}

/** -A mod n. */
inline std::vector<i64> residue_negate(i64 n, const std::vector<i64>& A) {
    std::vector<i64> out;
    out.reserve(A.size());
    for (i64 z : A) out.push_back(mod_floor(-z, n));
    return normalize_residues(n, out);
}

/** c * A mod n. */
inline std::vector<i64> residue_scale(i64 n, i64 c, const std::vector<i64>& A) {
    std::vector<i64> out;
    out.reserve(A.size());
    for (i64 z : A) out.push_back(mod_floor(mul_mod(mod_floor(c, n), mod_floor(z, n), n), n));
    return normalize_residues(n, out);
}

/** Monic reciprocal f*(X) = f(0)^{-1} X^{deg f} f(1/X); f(0) must be a unit. */
inline GRPoly grp_reciprocal(const GaloisRingCtx& R, const GRPoly& f) {
    if (f.empty()) throw std::invalid_argument("grp_reciprocal: zero polynomial");
    if (!gr_is_unit(R, f[0]))
        throw std::invalid_argument("grp_reciprocal: constant term is not a unit");
    GRPoly rev(f.rbegin(), f.rend());
    const GROps K{&R};
    return poly_scale(K, gr_inv(R, rev.back()), rev);
}

/* ------------------------------------------------------------------------ */
/* root-product crosscheck in the big ring GR(p^a, r m)                      */
/* ------------------------------------------------------------------------ */

/**
 * Recompute Omega(A) literally as prod_{z in A} (X - delta^z) inside
 * GR(p^a, r m), certify every coefficient is fixed by sigma^r, embed the
 * Hensel-route Omega(A) along x |-> zeta (a root of the small modulus among
 * the big Teichmuller powers), and compare.
 *
 * delta is the order-n Teichmuller element aligned with the small-field root
 * choice: among the powers xi^{u (p^{rm}-1)/n} (u coprime to n) the first one
 * that is a root of the embedded lifted factor of the coset of 1.  With that
 * single alignment, every coset product must agree with its embedded Hensel
 * factor, which is the substance of the check.
 *
 * Returns true on agreement; on failure returns false and stores a reason
 * in *why if given.  Throws BudgetError when the big ring is too large for
 * the modulus search (p^{rm} > 10^6).
 */
inline bool omega_roots_crosscheck(const GRFactorTable& T, const std::vector<i64>& A,
                                   std::string* why = nullptr) {
    const GaloisRingCtx& R = T.ring;
    const int rm = R.r * T.field.ext_degree;
    if (ipow128(R.p, rm) > static_cast<u128>(1000000))
        throw BudgetError("omega_roots_crosscheck: big ring GR(p^a, r*m) exceeds budget");
    const GaloisRingCtx big = make_galois_ring(R.p, R.a, rm);
    const u128 group = ipow128(R.p, rm) - 1;
    const GROps KB{&big};

    GRElem xi = gr_zero(big);
    if (rm == 1) {
        xi[0] = mod_floor(-big.modulus[0], big.pa);
    } else {
        xi[1] = 1;
    }

    // embedding: zeta = eta^k with eta of order q - 1 and modulus~(zeta) = 0
    GRElem zeta = gr_one(big);
    if (R.q > 2) {
        const GRElem eta = gr_pow(big, xi, group / static_cast<u128>(R.q - 1));
        bool found = false;
        GRElem cand = gr_one(big);
        for (i64 k = 0; k < R.q - 1; ++k) {
            if (k > 0) cand = gr_mul(big, cand, eta);
            GRElem val = gr_zero(big);
            for (std::size_t i = R.modulus.size(); i-- > 0;) {
                val = gr_add(big, gr_mul(big, val, cand), gr_from_int(big, R.modulus[i]));
                if (i == 0) break;
            }
            if (gr_is_zero(big, val)) {
                zeta = cand;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("omega_roots_crosscheck: no embedding root found");
    }
    auto embed = [&](const GRElem& x) {
        GRElem acc = gr_zero(big);
        GRElem zp = gr_one(big);
        for (int i = 0; i < R.r; ++i) {
            acc = gr_add(big, acc, gr_scale(big, x[static_cast<std::size_t>(i)], zp));
            zp = gr_mul(big, zp, zeta);
        }
        return acc;
    };
    auto embed_poly = [&](const GRPoly& f) {
        Poly<GROps> out;
        out.reserve(f.size());
        for (const GRElem& c : f) out.push_back(embed(c));
        poly_trim(KB, out);
        return out;
    };

    // delta of exact order n, aligned with the coset-of-1 factor
    const GRElem delta0 = gr_pow(big, xi, group / static_cast<u128>(T.n));
    if (!gr_is_zero(big, gr_sub(big, gr_pow(big, delta0, static_cast<u128>(T.n)), gr_one(big))))
        throw std::logic_error("omega_roots_crosscheck: delta^n != 1");
    for (i64 P : prime_factors(T.n)) {
        if (gr_is_zero(big,
                       gr_sub(big, gr_pow(big, delta0, static_cast<u128>(T.n / P)), gr_one(big))))
            throw std::logic_error("omega_roots_crosscheck: delta has order < n");
    }
    GRElem delta = delta0;
    if (T.n > 1) {
        const Poly<GROps> lifted_one =
            embed_poly(T.factors[coset_index_of(T.atlas, 1)]);
        bool aligned = false;
        for (i64 u = 1; u < T.n; ++u) {
            if (std::gcd(u, T.n) != 1) continue;
            const GRElem cand = gr_pow(big, delta0, static_cast<u128>(u));
            if (gr_is_zero(big, poly_eval(KB, lifted_one, cand))) {
                delta = cand;
                aligned = true;
                break;
            }
        }
        if (!aligned) {
            if (why) *why = "no order-n Teichmuller root of the lifted factor of coset(1)";
            return false;
        }
    }

    const std::vector<i64> norm = normalize_residues(T.n, A);
    (void)coset_indices_of_union(T.atlas, norm);  // validate
    Poly<GROps> big_omega = poly_one(KB);
    for (i64 z : norm) {
        Poly<GROps> lin{gr_neg(big, gr_pow(big, delta, static_cast<u128>(z))), gr_one(big)};
        big_omega = poly_mul(KB, big_omega, lin);
    }
    for (const GRElem& c : big_omega) {
        if (gr_sigma_iter(big, c, R.r) != c) {
            if (why) *why = "coefficient not fixed by sigma^r";
            return false;
        }
    }
    if (!poly_eq(KB, embed_poly(omega(T, norm)), big_omega)) {
        if (why) *why = "root product disagrees with the embedded Hensel factor";
        return false;
    }
    return true;
}

}  // namespace hullcodes
