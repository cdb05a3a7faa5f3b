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

#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "hullcodes/cosetlab.hpp"

using namespace hullcodes;

// ===========================================================================
// modular helpers
// ===========================================================================

TEST(ModHelpers, PowAndOrder) {
    EXPECT_EQ(pow_mod(2, 10, 1000), 24);
    EXPECT_EQ(pow_mod(3, 0, 7), 1);
    EXPECT_EQ(pow_mod(-1, 5, 7), 6);
    EXPECT_EQ(mult_order(2, 7), 3);
    EXPECT_EQ(mult_order(3, 7), 6);
    EXPECT_EQ(mult_order(2, 15), 4);
    EXPECT_EQ(mult_order(2, 1), 1);   // everything is 1 mod 1
    EXPECT_EQ(mult_order(4, 9), 3);
    EXPECT_THROW(mult_order(2, 4), std::invalid_argument);
    EXPECT_THROW(pow_mod(2, -1, 5), std::invalid_argument);
}

TEST(ModHelpers, OrderDividesPhi) {
    for (i64 m = 1; m <= 60; ++m) {
        for (i64 x = 1; x < std::max<i64>(m, 2); ++x) {
            if (std::gcd(x, m) != 1) continue;
            const i64 k = mult_order(x, m);
            EXPECT_EQ(euler_phi(m) % k, 0) << "m=" << m << " x=" << x;
            EXPECT_EQ(pow_mod(x, k, m), 1 % m);
        }
    }
}

// ===========================================================================
// elementary number theory
// ===========================================================================

TEST(NumberTheory, PhiDivisorsPrimes) {
    EXPECT_EQ(euler_phi(1), 1);
    EXPECT_EQ(euler_phi(2), 1);
    EXPECT_EQ(euler_phi(15), 8);
    EXPECT_EQ(euler_phi(21), 12);
    EXPECT_EQ(euler_phi(27), 18);
    EXPECT_EQ(divisors(21), (std::vector<i64>{1, 3, 7, 21}));
    EXPECT_EQ(divisors(1), (std::vector<i64>{1}));
    EXPECT_EQ(prime_factors(60), (std::vector<i64>{2, 3, 5}));
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(97));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(91));
    // Gauss: sum of phi over divisors is the identity.
    for (i64 n = 1; n <= 200; ++n) {
        i64 total = 0;
        for (i64 d : divisors(n)) total += euler_phi(d);
        EXPECT_EQ(total, n);
    }
}

// ===========================================================================
// the family N_q
// ===========================================================================

TEST(NqFamily, SmallMembers) {
    // d | 2^i + 1 for some i: 3 | 2^1+1, 5 | 2^2+1, 9 | 2^3+1, 11 | 2^5+1.
    EXPECT_TRUE(in_Nq(1, 2));
    EXPECT_TRUE(in_Nq(3, 2));
    EXPECT_TRUE(in_Nq(5, 2));
    EXPECT_TRUE(in_Nq(9, 2));
    EXPECT_TRUE(in_Nq(11, 2));
    EXPECT_FALSE(in_Nq(7, 2));    // 2^i mod 7 cycles 2,4,1 — never 6
    EXPECT_FALSE(in_Nq(15, 2));   // 2,4,8,1 — never 14
    EXPECT_FALSE(in_Nq(21, 2));
    EXPECT_FALSE(in_Nq(23, 2));
    EXPECT_TRUE(in_Nq(1, 3));
    EXPECT_TRUE(in_Nq(2, 3));     // 3 odd: 2 | 3^1 + 1
    EXPECT_TRUE(in_Nq(4, 3));     // 4 | 3^1 + 1
    EXPECT_TRUE(in_Nq(5, 3));     // 5 | 3^2 + 1
    EXPECT_FALSE(in_Nq(11, 3));
    EXPECT_FALSE(in_Nq(13, 3));
    EXPECT_THROW(in_Nq(6, 2), std::invalid_argument);
}

TEST(NqFamily, AgreesWithDirectSearch) {
    // Direct definition with a generous scan bound (period = ord, checked).
    for (i64 q : {2, 3, 4, 5, 8, 9}) {
        for (i64 d = 1; d <= 120; ++d) {
            if (std::gcd(d, q) != 1) continue;
            bool direct = false;
            i64 acc = 1 % d;
            for (i64 i = 1; i <= 2 * d; ++i) {
                acc = mul_mod(acc, q % d, d);
                if (acc == mod_floor(-1, d)) { direct = true; break; }
            }
            EXPECT_EQ(in_Nq(d, q), direct) << "d=" << d << " q=" << q;
        }
    }
}

TEST(NqFamily, ClosedUnderDivisors) {
    for (i64 q : {2, 3, 5}) {
        for (i64 n = 1; n <= 150; ++n) {
            if (std::gcd(n, q) != 1) continue;
            if (!in_Nq(n, q)) continue;
            for (i64 d : divisors(n)) EXPECT_TRUE(in_Nq(d, q)) << n << " " << d << " " << q;
        }
    }
}

// ===========================================================================
// census counts
// ===========================================================================

TEST(Census, GammaBetaOmegaExamples) {
    // n = 15, q = 2: cosets {0}, {5,10}, {3,6,9,12}, {1,2,4,8}, {7,11,13,14}.
    EXPECT_EQ(gamma_count(1, 2), 1);
    EXPECT_EQ(gamma_count(3, 2), 1);
    EXPECT_EQ(gamma_count(5, 2), 1);
    EXPECT_EQ(gamma_count(15, 2), 0);
    EXPECT_EQ(beta_count(15, 2), 1);
    EXPECT_EQ(omega_count(15, 2), 5);
    EXPECT_EQ(B_count(15, 2), 1 + 2 + 4);  // divisors 1, 3, 5 are in N_2

    // n = 7, q = 2: {0}, {1,2,4}, {3,6,5} — one symmetric, one pair.
    EXPECT_EQ(omega_count(7, 2), 3);
    EXPECT_EQ(gamma_total(7, 2), 1);
    EXPECT_EQ(beta_total(7, 2), 1);
    EXPECT_EQ(B_count(7, 2), 1);

    // n = 21, q = 2.
    EXPECT_EQ(gamma_total(21, 2), 2);  // {0}, {7,14}
    EXPECT_EQ(beta_total(21, 2), 2);   // {1,2,4,8,16,11}/{3,6,12}-type pairs
    EXPECT_EQ(omega_count(21, 2), 6);
    EXPECT_EQ(B_count(21, 2), 3);

    // n = 11, q = 3.
    EXPECT_EQ(gamma_total(11, 3), 1);
    EXPECT_EQ(beta_total(11, 3), 1);
    EXPECT_EQ(omega_count(11, 3), 3);
    EXPECT_EQ(B_count(11, 3), 1);
}

TEST(Census, CountsMatchAtlasOnGrid) {
    for (i64 q : {2, 3, 4, 8, 9}) {
        for (i64 n = 1; n <= 64; ++n) {
            if (std::gcd(n, q) != 1) continue;
            CosetAtlas atlas = build_atlas(n, q);
            EXPECT_EQ(static_cast<i64>(atlas.cosets.size()), omega_count(n, q));
            EXPECT_EQ(static_cast<i64>(atlas.symmetric_idx.size()), gamma_total(n, q));
            EXPECT_EQ(static_cast<i64>(atlas.asym_pairs.size()), beta_total(n, q));
            i64 sym_mass = 0;
            for (std::size_t i : atlas.symmetric_idx)
                sym_mass += atlas.cosets[i].size();
            EXPECT_EQ(sym_mass, B_count(n, q)) << "n=" << n << " q=" << q;
        }
    }
}

// ===========================================================================
// cosets and the atlas
// ===========================================================================

TEST(Cosets, Mod15Base2) {
    CosetAtlas atlas = build_atlas(15, 2);
    ASSERT_EQ(atlas.cosets.size(), 5u);
    EXPECT_EQ(atlas.cosets[coset_index_of(atlas, 0)].elems, (std::vector<i64>{0}));
    EXPECT_EQ(atlas.cosets[coset_index_of(atlas, 5)].elems, (std::vector<i64>{5, 10}));
    EXPECT_EQ(atlas.cosets[coset_index_of(atlas, 3)].elems, (std::vector<i64>{3, 6, 9, 12}));
    EXPECT_EQ(atlas.cosets[coset_index_of(atlas, 1)].elems, (std::vector<i64>{1, 2, 4, 8}));
    EXPECT_EQ(atlas.cosets[coset_index_of(atlas, 7)].elems, (std::vector<i64>{7, 11, 13, 14}));
    EXPECT_TRUE(atlas.cosets[coset_index_of(atlas, 5)].symmetric);
    EXPECT_TRUE(atlas.cosets[coset_index_of(atlas, 3)].symmetric);
    EXPECT_FALSE(atlas.cosets[coset_index_of(atlas, 1)].symmetric);
    ASSERT_EQ(atlas.asym_pairs.size(), 1u);
    EXPECT_EQ(atlas.cosets[atlas.asym_pairs[0].first].rep, 1);
    EXPECT_EQ(atlas.cosets[atlas.asym_pairs[0].second].rep, 7);
}

TEST(Cosets, DivisorAndSizeLaw) {
    for (i64 q : {2, 3, 9}) {
        for (i64 n = 1; n <= 63; ++n) {
            if (std::gcd(n, q) != 1) continue;
            CosetAtlas atlas = build_atlas(n, q);
            std::set<i64> seen;
            for (const Coset& c : atlas.cosets) {
                // size = ord_j(q) with j the divisor key; symmetric iff j in N_q
                EXPECT_EQ(c.size(), mult_order(q, c.divisor));
                EXPECT_EQ(c.symmetric, in_Nq(c.divisor, q));
                for (i64 e : c.elems) {
                    EXPECT_TRUE(seen.insert(e).second);  // partition: no overlap
                    EXPECT_EQ(n / std::gcd(n, e), c.divisor);
                }
            }
            EXPECT_EQ(static_cast<i64>(seen.size()), n);  // partition: covers
        }
    }
}

TEST(Cosets, PairOrderingWithinAtlas) {
    CosetAtlas atlas = build_atlas(21, 2);
    for (auto [f, g] : atlas.asym_pairs) {
        EXPECT_LT(atlas.cosets[f].rep, atlas.cosets[g].rep);
        EXPECT_EQ(atlas.cosets[f].divisor, atlas.cosets[g].divisor);
        // mate really is the negation
        std::vector<i64> neg;
        for (i64 e : atlas.cosets[f].elems) neg.push_back(mod_floor(-e, 21));
        std::sort(neg.begin(), neg.end());
        EXPECT_EQ(neg, atlas.cosets[g].elems);
    }
    // ordering: by (divisor, rep)
    for (std::size_t i = 1; i < atlas.symmetric_idx.size(); ++i) {
        const Coset& a = atlas.cosets[atlas.symmetric_idx[i - 1]];
        const Coset& b = atlas.cosets[atlas.symmetric_idx[i]];
        EXPECT_LT(std::make_pair(a.divisor, a.rep), std::make_pair(b.divisor, b.rep));
    }
}

TEST(Cosets, RejectsBadArguments) {
    EXPECT_THROW(build_atlas(4, 2), std::invalid_argument);
    EXPECT_THROW(build_atlas(0, 3), std::invalid_argument);
    EXPECT_THROW(coset_of(1, 9, 3), std::invalid_argument);
}

int main(int argc, char** argv) {
    ::testing::InitGoogleTest(&argc, argv);
    return RUN_ALL_TESTS();
}
