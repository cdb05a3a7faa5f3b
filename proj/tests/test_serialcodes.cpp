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
 * @file test_serialcodes.cpp
 * @brief Tests for defining multisets, lattice/dual/hull operations, and the
 *        generator-matrix realization of cyclic serial codes.
 */

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "hullcodes/serialcodes.hpp"

using namespace hullcodes;

namespace {

/// Random coset-closed multiset: every coset gets a uniform part index.
DefiningMultiset random_multiset(const CosetAtlas& atlas, int s, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(0, s);
    std::vector<int> rho(atlas.cosets.size());
    for (auto& x : rho) x = dist(rng);
    return multiset_from_part_indices(atlas, s, rho);
}

/// All ring specs whose element arithmetic is implemented.
std::vector<RingSpec> arithmetic_specs() {
    return {RingSpec::named("Z4"),   RingSpec::named("Z8"),  RingSpec::named("Z9"),
            RingSpec::named("Z27"),  RingSpec::named("F2u2"), RingSpec::named("GR42")};
}

}  // namespace

// ======================================================================
// Multiset construction and validation
// ======================================================================

TEST(Multiset, MakeValidatesPartition) {
    EXPECT_NO_THROW(multiset_make(4, 1, {{0, 2}, {1, 3}}));
    EXPECT_THROW(multiset_make(4, 1, {{0, 2}, {1}}), std::invalid_argument);       // missing 3
    EXPECT_THROW(multiset_make(4, 1, {{0, 2}, {1, 2, 3}}), std::invalid_argument); // overlap
    EXPECT_THROW(multiset_make(4, 1, {{0, 1, 2, 3}}), std::invalid_argument);      // wrong arity
    EXPECT_THROW(multiset_make(4, 1, {{0, 0, 2}, {1, 3}}), std::invalid_argument); // repeat
    const DefiningMultiset A = multiset_make(6, 2, {{5, 0}, {4, 2}, {3, 1}});
    EXPECT_EQ(A.parts[0], (std::vector<i64>{0, 5}));
    EXPECT_EQ(multiset_part_of(A, 4), 1);
    EXPECT_EQ(multiset_part_of(A, -2), 1);  // -2 == 4 mod 6
}

TEST(Multiset, ZeroAndFullHelpers) {
    const DefiningMultiset Z = multiset_zero(5, 3);
    const DefiningMultiset F = multiset_full(5, 3);
    EXPECT_EQ(multiset_qdim(Z), 0);
    EXPECT_EQ(multiset_qdim(F), 15);
    EXPECT_EQ(multiset_params(Z), (std::vector<i64>{0, 0, 0}));
    EXPECT_EQ(multiset_params(F), (std::vector<i64>{5, 0, 0}));
}

TEST(Multiset, ScaleRequiresUnit) {
    const DefiningMultiset A = multiset_full(6, 1);
    EXPECT_THROW(multiset_scale(A, 2), std::invalid_argument);
    EXPECT_NO_THROW(multiset_scale(A, 5));
}

// ======================================================================
// Worked example over Z4, n = 7
// ======================================================================

TEST(Multiset, WorkedExampleDualAndHull) {
    const RingSpec spec = RingSpec::named("Z4");
    const DefiningMultiset A = multiset_make(7, 2, {{0}, {3, 5, 6}, {1, 2, 4}});

    const DefiningMultiset D = dual_multiset(spec, A, 0);
    EXPECT_EQ(D.parts[0], (std::vector<i64>{3, 5, 6}));
    EXPECT_EQ(D.parts[1], (std::vector<i64>{1, 2, 4}));
    EXPECT_EQ(D.parts[2], (std::vector<i64>{0}));

    const DefiningMultiset H = hull_multiset(spec, A, 0);
    EXPECT_TRUE(H.parts[0].empty());
    EXPECT_EQ(H.parts[1], (std::vector<i64>{3, 5, 6}));
    EXPECT_EQ(H.parts[2], (std::vector<i64>{0, 1, 2, 4}));

    EXPECT_EQ(multiset_qdim(A), 5);
    EXPECT_EQ(multiset_qdim(D), 9);
    EXPECT_EQ(multiset_qdim(H), 3);
}

// ======================================================================
// Lattice operations
// ======================================================================

TEST(Multiset, SqcupMatchesLevelSetFormula) {
    std::mt19937_64 rng(20260815);
    for (i64 n : {5, 9, 15}) {
        const CosetAtlas atlas = build_atlas(n, 2);
        for (int s : {1, 2, 3}) {
            for (int rep = 0; rep < 8; ++rep) {
                const DefiningMultiset A = random_multiset(atlas, s, rng);
                const DefiningMultiset B = random_multiset(atlas, s, rng);
                const DefiningMultiset E = multiset_sqcup(A, B);
                // Level-set form: E_0 = A_0 u B_0, then successive leftovers,
                // with everything not yet placed falling to depth s.
                std::vector<char> placed(static_cast<std::size_t>(n), 0);
                for (int t = 0; t <= s; ++t) {
                    std::vector<i64> expect;
                    for (i64 z = 0; z < n; ++z) {
                        if (placed[static_cast<std::size_t>(z)]) continue;
                        const bool in_union =
                            multiset_part_of(A, z) == t || multiset_part_of(B, z) == t;
                        if ((t < s && in_union) || t == s) expect.push_back(z);
                    }
                    for (i64 z : expect) placed[static_cast<std::size_t>(z)] = 1;
                    EXPECT_EQ(E.parts[static_cast<std::size_t>(t)], expect);
                }
                // Intersection is the diamond-conjugate of the sum.
                const DefiningMultiset I = multiset_sqcap(A, B);
                const DefiningMultiset I2 = multiset_diamond(
                    multiset_sqcup(multiset_diamond(A), multiset_diamond(B)));
                EXPECT_TRUE(multiset_eq(I, I2));
            }
        }
    }
}

TEST(Multiset, SumIntersectionDuality) {
    std::mt19937_64 rng(7);
    for (const RingSpec& spec : arithmetic_specs()) {
        for (i64 n : {3, 5, 7, 9}) {
            if (n % spec.p == 0) continue;
            const CosetAtlas atlas = build_atlas(n, spec.q);
            for (int rep = 0; rep < 6; ++rep) {
                const DefiningMultiset A = random_multiset(atlas, spec.s, rng);
                const DefiningMultiset B = random_multiset(atlas, spec.s, rng);
                for (i64 ell = 0; ell < spec.r; ++ell) {
                    const DefiningMultiset lhs = dual_multiset(spec, multiset_sqcup(A, B), ell);
                    const DefiningMultiset rhs =
                        multiset_sqcap(dual_multiset(spec, A, ell), dual_multiset(spec, B, ell));
                    EXPECT_TRUE(multiset_eq(lhs, rhs));
                }
            }
        }
    }
}

TEST(Multiset, DoubleDualIsGaloisShift) {
    std::mt19937_64 rng(11);
    for (const RingSpec& spec : arithmetic_specs()) {
        for (i64 n : {3, 5, 7}) {
            if (n % spec.p == 0) continue;
            const CosetAtlas atlas = build_atlas(n, spec.q);
            for (int rep = 0; rep < 6; ++rep) {
                const DefiningMultiset A = random_multiset(atlas, spec.s, rng);
                for (i64 ell = 0; ell < spec.r; ++ell) {
                    for (i64 h = 0; h < spec.r; ++h) {
                        const DefiningMultiset twice =
                            dual_multiset(spec, dual_multiset(spec, A, ell), h);
                        EXPECT_TRUE(multiset_eq(twice, sigma_multiset(spec, A, ell + h)));
                        // For r <= 2 the shift ell + h equals 2r - ell - h mod r.
                        EXPECT_TRUE(multiset_eq(
                            twice, sigma_multiset(spec, A, mod_floor(2 * spec.r - ell - h, spec.r))));
                    }
                }
            }
        }
    }
}

TEST(Multiset, DimensionSumLaw) {
    std::mt19937_64 rng(13);
    for (const RingSpec& spec : arithmetic_specs()) {
        for (i64 n : {3, 5, 7, 11}) {
            if (n % spec.p == 0) continue;
            const CosetAtlas atlas = build_atlas(n, spec.q);
            for (int rep = 0; rep < 6; ++rep) {
                const DefiningMultiset A = random_multiset(atlas, spec.s, rng);
                for (i64 ell = 0; ell < spec.r; ++ell) {
                    const DefiningMultiset D = dual_multiset(spec, A, ell);
                    EXPECT_EQ(multiset_qdim(A) + multiset_qdim(D),
                              static_cast<i64>(spec.s) * n);
                    // Parameter tuple of the dual.
                    const std::vector<i64> k = multiset_params(A);
                    std::vector<i64> expect{n};
                    for (i64 kt : k) expect[0] -= kt;
                    for (int t = spec.s - 1; t >= 1; --t)
                        expect.push_back(k[static_cast<std::size_t>(t)]);
                    EXPECT_EQ(multiset_params(D), expect);
                }
            }
        }
    }
}

TEST(Multiset, PartIndexProfileRoundTrip) {
    std::mt19937_64 rng(17);
    const CosetAtlas atlas = build_atlas(21, 2);
    for (int rep = 0; rep < 10; ++rep) {
        const DefiningMultiset A = random_multiset(atlas, 3, rng);
        const std::vector<int> rho = part_index_profile(atlas, A);
        EXPECT_TRUE(multiset_eq(A, multiset_from_part_indices(atlas, 3, rho)));
    }
    // Non-coset-closed parts are rejected.
    const DefiningMultiset bad = multiset_make(7, 1, {{0, 1}, {2, 3, 4, 5, 6}});
    EXPECT_THROW(part_index_profile(atlas, bad), std::invalid_argument);   // n mismatch
    const CosetAtlas atlas7 = build_atlas(7, 2);
    EXPECT_THROW(part_index_profile(atlas7, bad), std::invalid_argument);  // splits a coset
}

TEST(Multiset, EuclideanHullPerCosetLaw) {
    std::mt19937_64 rng(19);
    for (const RingSpec& spec : arithmetic_specs()) {
        for (i64 n : {5, 7, 9, 11, 15}) {
            if (n % spec.p == 0) continue;
            const CosetAtlas atlas = build_atlas(n, spec.q);
            const int s = spec.s;
            for (int rep = 0; rep < 8; ++rep) {
                const DefiningMultiset A = random_multiset(atlas, s, rng);
                const std::vector<int> rho = part_index_profile(atlas, A);
                const std::vector<int> hull =
                    part_index_profile(atlas, hull_multiset(spec, A, 0));
                for (std::size_t i = 0; i < atlas.cosets.size(); ++i) {
                    const std::size_t j = coset_index_of(atlas, -atlas.cosets[i].rep);
                    if (atlas.cosets[i].symmetric) {
                        EXPECT_EQ(hull[i], std::max(rho[i], s - rho[i]));
                    } else {
                        EXPECT_EQ(hull[i], std::max(rho[i], s - rho[j]));
                    }
                }
            }
        }
    }
}

// ======================================================================
// Code realization
// ======================================================================

namespace {

struct CodeFixture {
    ChainRingCtx ring;
    GRFactorTable table;
};

CodeFixture fixture(const RingSpec& spec, i64 n) {
    ChainRingCtx ring = make_ring(spec);
    GRFactorTable table = gr_factor_xn1(ring.gr, n);
    return CodeFixture{std::move(ring), std::move(table)};
}

CodeFixture fixture(const std::string& name, i64 n) { return fixture(RingSpec::named(name), n); }

/// Exhaustive span of a short list of rows (tiny cases only).
std::set<std::vector<i64>> span_of(const ChainRingCtx& R, const std::vector<RVec>& rows) {
    std::set<std::vector<i64>> out;
    std::vector<std::size_t> combo(rows.size(), 0);
    const std::size_t count = static_cast<std::size_t>(R.size);
    while (true) {
        RVec v = rv_zero(R, rows.empty() ? 0 : static_cast<i64>(rows[0].size()));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const RElem c = r_from_index(R, static_cast<i64>(combo[i]));
            v = rv_add(R, v, rv_scale(R, c, rows[i]));
        }
        std::vector<i64> key;
        for (const RElem& x : v) key.push_back(r_index(R, x));
        out.insert(std::move(key));
        std::size_t pos = 0;
        while (pos < combo.size() && ++combo[pos] == count) combo[pos++] = 0;
        if (pos == combo.size()) break;
        if (rows.empty()) break;
    }
    return out;
}

}  // namespace

TEST(Codes, WorkedExampleRealization) {
    const CodeFixture fx = fixture("Z4", 7);
    const DefiningMultiset A = multiset_make(7, 2, {{0}, {3, 5, 6}, {1, 2, 4}});
    const CyclicSerialCode C = make_code(fx.ring, fx.table, A);

    EXPECT_EQ(code_params(C), (std::vector<i64>{1, 3}));
    EXPECT_EQ(code_qdim(C), 5);

    const std::vector<RVec> rows = generator_rows(C);
    ASSERT_EQ(rows.size(), 4u);

    const ThetaEchelon E = code_echelon(C);
    EXPECT_EQ(E.profile, code_params(C));
    EXPECT_EQ(E.qdim, 5);

    // |C| = q^qdim, checked by exhaustive span enumeration (4^4 combos).
    const auto words = span_of(fx.ring, rows);
    EXPECT_EQ(words.size(), 32u);

    // Hull realization: contained in both the code and its dual.
    const CyclicSerialCode H = hull_code(C, 0);
    EXPECT_EQ(code_qdim(H), 3);
    const ThetaEchelon EC = code_echelon(C);
    const ThetaEchelon ED = code_echelon(dual_code(C, 0));
    for (const RVec& row : generator_rows(H)) {
        EXPECT_TRUE(echelon_contains(fx.ring, EC, row));
        EXPECT_TRUE(echelon_contains(fx.ring, ED, row));
    }
}

TEST(Codes, EchelonProfileMatchesParams) {
    std::mt19937_64 rng(23);
    for (const RingSpec& spec : arithmetic_specs()) {
        for (i64 n : {1, 3, 5, 7, 9}) {
            if (n % spec.p == 0) continue;
            const CodeFixture fx = fixture(spec, n);
            for (int rep = 0; rep < 4; ++rep) {
                const DefiningMultiset A = random_multiset(fx.table.atlas, spec.s, rng);
                const CyclicSerialCode C = make_code(fx.ring, fx.table, A);
                const ThetaEchelon E = code_echelon(C);
                EXPECT_EQ(E.profile, multiset_params(A));
                EXPECT_EQ(E.qdim, multiset_qdim(A));
            }
        }
    }
}

TEST(Codes, DualRowsAreOrthogonal) {
    std::mt19937_64 rng(29);
    for (const RingSpec& spec : arithmetic_specs()) {
        for (i64 n : {3, 5, 7}) {
            if (n % spec.p == 0) continue;
            const CodeFixture fx = fixture(spec, n);
            for (int rep = 0; rep < 4; ++rep) {
                const DefiningMultiset A = random_multiset(fx.table.atlas, spec.s, rng);
                const CyclicSerialCode C = make_code(fx.ring, fx.table, A);
                const std::vector<RVec> crows = generator_rows(C);
                for (i64 ell = 0; ell < spec.r; ++ell) {
                    const CyclicSerialCode D = dual_code(C, ell);
                    EXPECT_EQ(code_qdim(C) + code_qdim(D), static_cast<i64>(spec.s) * n);
                    for (const RVec& u : generator_rows(D)) {
                        for (const RVec& c : crows) {
                            EXPECT_TRUE(r_is_zero(fx.ring, galois_inner(fx.ring, u, c, ell)));
                        }
                    }
                }
            }
        }
    }
}

TEST(Codes, SigmaCodeContainsTwistedRows) {
    std::mt19937_64 rng(31);
    for (i64 n : {3, 5}) {
        const CodeFixture fx = fixture("GR42", n);
        for (int rep = 0; rep < 6; ++rep) {
            const DefiningMultiset A = random_multiset(fx.table.atlas, 2, rng);
            const CyclicSerialCode C = make_code(fx.ring, fx.table, A);
            for (i64 h = 0; h < 2; ++h) {
                const CyclicSerialCode S = sigma_code(C, h);
                const ThetaEchelon ES = code_echelon(S);
                for (const RVec& row : generator_rows(C)) {
                    RVec twisted(row.size());
                    for (std::size_t j = 0; j < row.size(); ++j)
                        twisted[j] = r_sigma_iter(fx.ring, row[j], h);
                    EXPECT_TRUE(echelon_contains(fx.ring, ES, twisted));
                }
                EXPECT_EQ(code_qdim(S), code_qdim(C));
            }
        }
    }
}

TEST(Codes, SumAndIntersectionRealization) {
    std::mt19937_64 rng(37);
    const CodeFixture fx = fixture("Z8", 7);
    for (int rep = 0; rep < 6; ++rep) {
        const DefiningMultiset A = random_multiset(fx.table.atlas, 3, rng);
        const DefiningMultiset B = random_multiset(fx.table.atlas, 3, rng);
        const CyclicSerialCode CA = make_code(fx.ring, fx.table, A);
        const CyclicSerialCode CB = make_code(fx.ring, fx.table, B);
        const CyclicSerialCode CS = sum_code(CA, CB);
        const CyclicSerialCode CI = intersect_code(CA, CB);
        const ThetaEchelon ES = code_echelon(CS);
        const ThetaEchelon EA = code_echelon(CA);
        const ThetaEchelon EB = code_echelon(CB);
        // Sum contains both summands; intersection sits inside both.
        for (const RVec& row : generator_rows(CA)) EXPECT_TRUE(echelon_contains(fx.ring, ES, row));
        for (const RVec& row : generator_rows(CB)) EXPECT_TRUE(echelon_contains(fx.ring, ES, row));
        for (const RVec& row : generator_rows(CI)) {
            EXPECT_TRUE(echelon_contains(fx.ring, EA, row));
            EXPECT_TRUE(echelon_contains(fx.ring, EB, row));
        }
        // Modular dimension identity for the lattice of multisets.
        EXPECT_EQ(multiset_qdim(CS.A) + multiset_qdim(CI.A),
                  multiset_qdim(A) + multiset_qdim(B));
    }
}

TEST(Codes, ResidueGeneratorDegreeAndDivisibility) {
    std::mt19937_64 rng(41);
    const CodeFixture fx = fixture("Z9", 8);
    const FOps K{&fx.table.field.field};
    for (int rep = 0; rep < 6; ++rep) {
        const DefiningMultiset A = random_multiset(fx.table.atlas, 2, rng);
        const CyclicSerialCode C = make_code(fx.ring, fx.table, A);
        const FPoly g = residue_generator(C);
        EXPECT_EQ(poly_deg<FOps>(g), static_cast<std::ptrdiff_t>(8 - A.parts[0].size()));
        const FPoly xn1 = poly_xn_minus_1(K, 8);
        const auto [q, r] = poly_divmod(K, xn1, g);
        EXPECT_TRUE(r.empty());
    }
}

TEST(Codes, MakeCodeValidation) {
    const CodeFixture fx = fixture("Z4", 7);
    // Splitting a coset across parts is rejected.
    EXPECT_THROW(
        make_code(fx.ring, fx.table, multiset_make(7, 2, {{0, 1}, {2, 4}, {3, 5, 6}})),
        std::invalid_argument);
    // Depth mismatch is rejected.
    EXPECT_THROW(make_code(fx.ring, fx.table, multiset_make(7, 3, {{0}, {}, {3, 5, 6}, {1, 2, 4}})),
                 std::invalid_argument);
    // Length mismatch is rejected.
    EXPECT_THROW(make_code(fx.ring, fx.table, multiset_zero(5, 2)), std::invalid_argument);
}

// ======================================================================
// Predicates
// ======================================================================

TEST(Predicates, DepthTwoClassification) {
    // For s = 2 and the Euclidean product: LCD iff every symmetric coset sits
    // at depth 0 or 2 and every asymmetric pair sits at (0,0) or (2,2);
    // self-orthogonal iff symmetric cosets sit at depth >= 1 and each
    // asymmetric pair (y, z) satisfies depth(y) + depth(z) >= 2.
    for (const std::string name : {"Z4", "Z9", "F2u2", "GR42"}) {
        const RingSpec spec = RingSpec::named(name);
        for (i64 n : {3, 5, 7}) {
            if (n % spec.p == 0) continue;
            const CosetAtlas atlas = build_atlas(n, spec.q);
            const std::size_t m = atlas.cosets.size();
            std::vector<int> rho(m, 0);
            while (true) {
                const DefiningMultiset A = multiset_from_part_indices(atlas, 2, rho);
                bool lcd = true, so = true;
                for (std::size_t i = 0; i < m; ++i) {
                    const std::size_t j = coset_index_of(atlas, -atlas.cosets[i].rep);
                    if (i == j) {
                        lcd = lcd && (rho[i] == 0 || rho[i] == 2);
                        so = so && rho[i] >= 1;
                    } else {
                        lcd = lcd && ((rho[i] == 0 && rho[j] == 0) ||
                                      (rho[i] == 2 && rho[j] == 2));
                        so = so && rho[i] + rho[j] >= 2;
                    }
                }
                EXPECT_EQ(is_lcd(spec, A, 0), lcd);
                EXPECT_EQ(is_self_orthogonal(spec, A, 0), so);
                std::size_t pos = 0;
                while (pos < m && ++rho[pos] == 3) rho[pos++] = 0;
                if (pos == m) break;
            }
        }
    }
}

TEST(Predicates, SelfDualExamples) {
    const RingSpec spec = RingSpec::named("Z4");
    // Over Z4 with n = 7 the multiset ({0}, {3,5,6}, {1,2,4}) is not
    // self-dual, but placing the two asymmetric cosets at depths 0 and 2
    // around a depth-1 symmetric coset gives a self-dual code.
    const DefiningMultiset A = multiset_make(7, 2, {{0}, {3, 5, 6}, {1, 2, 4}});
    EXPECT_FALSE(is_self_dual(spec, A, 0));
    const DefiningMultiset B = multiset_make(7, 2, {{1, 2, 4}, {0}, {3, 5, 6}});
    EXPECT_TRUE(is_self_dual(spec, B, 0));
    EXPECT_TRUE(is_self_orthogonal(spec, B, 0));
    EXPECT_FALSE(is_lcd(spec, B, 0));
}

int main(int argc, char** argv) {
    ::testing::InitGoogleTest(&argc, argv);
    return RUN_ALL_TESTS();
}
