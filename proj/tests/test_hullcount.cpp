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
 * @file test_hullcount.cpp
 * @brief Tests for hull-parameter counting: the depth functionals, psi/rho
 *        tables, counting polynomial, averages and bounds, the achievable
 *        dimension set, and the two tuple enumerators.
 */

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hullcodes/hullcount.hpp"
#include "hullcodes/serialcodes.hpp"

using namespace hullcodes;

namespace {

mpz_class mpz_pow(i64 base, i64 exp) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return out;
}

/// Expand a row-model { (k0,k1) -> list of k2 } into a tuple set.
std::set<std::vector<i64>> rows_to_tuples(
    const std::vector<std::pair<std::pair<i64, i64>, std::vector<i64>>>& rows) {
    std::set<std::vector<i64>> out;
    for (const auto& [pre, k2s] : rows)
        for (i64 k2 : k2s) out.insert({pre.first, pre.second, k2});
    return out;
}

std::vector<i64> range_inclusive(i64 lo, i64 hi) {
    std::vector<i64> v(static_cast<std::size_t>(hi - lo + 1));
    std::iota(v.begin(), v.end(), lo);
    return v;
}

}  // namespace

// ======================================================================
// Depth functionals and step sequences
// ======================================================================

TEST(Functionals, TriangleAtBasisVectors) {
    for (int s = 1; s <= 8; ++s) {
        const auto es = es_vectors(s);
        ASSERT_EQ(es.size(), static_cast<std::size_t>(s) + 1);
        for (int b = 0; b <= s; ++b) {
            EXPECT_EQ(triangle_delta(es[static_cast<std::size_t>(b)]),
                      std::min<i64>(b, s - b));
        }
    }
    // s = 3 spot table: e_0 -> 0, e_1 -> 1, e_2 -> 1, zero -> 0.
    const auto e3 = es_vectors(3);
    EXPECT_EQ(triangle_delta(e3[0]), 0);
    EXPECT_EQ(triangle_delta(e3[1]), 1);
    EXPECT_EQ(triangle_delta(e3[2]), 1);
    EXPECT_EQ(triangle_delta(e3[3]), 0);
}

TEST(Functionals, BlackTriangleAtBasisVectors) {
    for (int s = 1; s <= 8; ++s) {
        const auto es = es_vectors(s);
        for (int b = 0; b <= s; ++b) {
            for (int c = 0; c <= s; ++c) {
                const i64 expect =
                    std::min<i64>(s - b, c) + std::min<i64>(s - c, b);
                EXPECT_EQ(black_triangle(es[static_cast<std::size_t>(b)],
                                         es[static_cast<std::size_t>(c)]),
                          expect);
            }
        }
    }
}

TEST(Functionals, StepSequencesMatchHullDepths) {
    for (int s = 1; s <= 8; ++s) {
        for (int rho = 0; rho <= s; ++rho) {
            const auto u = sym_u_sequence(s, rho);
            EXPECT_EQ(u[0], 1);  // u[-1]
            const int hull = std::max(rho, s - rho);
            for (int t = 0; t < s; ++t) {
                const i64 step = u[static_cast<std::size_t>(t)] -
                                 u[static_cast<std::size_t>(t) + 1];
                EXPECT_GE(step, 0);
                EXPECT_EQ(step, hull == t ? 1 : 0);
            }
        }
        for (int ry = 0; ry <= s; ++ry) {
            for (int rz = 0; rz <= s; ++rz) {
                const auto eps = pair_epsilon_sequence(s, ry, rz);
                EXPECT_EQ(eps[0], 2);  // eps[-1]
                const int hy = std::max(ry, s - rz);
                const int hz = std::max(rz, s - ry);
                for (int t = 0; t < s; ++t) {
                    const i64 step = eps[static_cast<std::size_t>(t)] -
                                     eps[static_cast<std::size_t>(t) + 1];
                    EXPECT_GE(step, 0);
                    EXPECT_LE(step, 2);
                    EXPECT_EQ(step, (hy == t ? 1 : 0) + (hz == t ? 1 : 0));
                }
            }
        }
    }
}

// ======================================================================
// psi / rho tables
// ======================================================================

TEST(Tables, ClosedFormsAndMasses) {
    for (int s = 1; s <= 10; ++s) {
        const DeltaTables T = delta_tables(s);
        i64 psi_mass = 0, rho_mass = 0;
        for (i64 eta = 0; eta <= s; ++eta) {
            EXPECT_EQ(T.psi[static_cast<std::size_t>(eta)], psi_closed(s, eta));
            EXPECT_EQ(T.rho[static_cast<std::size_t>(eta)], rho_closed(s, eta));
            psi_mass += T.psi[static_cast<std::size_t>(eta)];
            rho_mass += T.rho[static_cast<std::size_t>(eta)];
        }
        EXPECT_EQ(psi_mass, s + 1);
        EXPECT_EQ(rho_mass, static_cast<i64>(s + 1) * (s + 1));
        // Expectations.
        const int half = (s + 1) / 2;
        mpq_class ed(static_cast<long>(half) * (s - half), s + 1);
        ed.canonicalize();
        mpq_class eb(static_cast<long>(s) * (2 * s + 1), 3L * (s + 1));
        eb.canonicalize();
        EXPECT_EQ(T.e_delta, ed);
        EXPECT_EQ(T.e_black, eb);
    }
    // Spot values.
    const DeltaTables T3 = delta_tables(3);
    EXPECT_EQ(T3.psi, (std::vector<i64>{2, 2, 0, 0}));
    EXPECT_EQ(T3.rho, (std::vector<i64>{2, 4, 6, 4}));
    const DeltaTables T1 = delta_tables(1);
    EXPECT_EQ(T1.rho, (std::vector<i64>{2, 2}));
}

// ======================================================================
// Counting polynomial
// ======================================================================

TEST(Counting, MassAndMeanIdentities) {
    for (i64 q : {2, 3, 4}) {
        for (int s : {1, 2, 3, 4, 5}) {
            for (i64 n : {1, 5, 7, 9, 12, 21, 33}) {
                if (std::gcd(n, q) != 1) continue;
                const auto poly = count_hulls(n, q, s);
                mpz_class mass = 0, weighted = 0;
                for (std::size_t tau = 0; tau < poly.size(); ++tau) {
                    mass += poly[tau];
                    weighted += poly[tau] * static_cast<long>(tau);
                }
                const mpz_class expect_mass = mpz_pow(s + 1, omega_count(n, q));
                EXPECT_EQ(mass, expect_mass) << "n=" << n << " q=" << q << " s=" << s;
                mpq_class mean(weighted, expect_mass);
                mean.canonicalize();
                EXPECT_EQ(mean, average_hull_qdim(n, q, s))
                    << "n=" << n << " q=" << q << " s=" << s;
            }
        }
    }
}

TEST(Counting, MatchesExhaustiveTallies) {
    struct Case {
        i64 n, q;
        int s;
    };
    for (const Case c : {Case{7, 2, 2}, Case{7, 2, 3}, Case{11, 3, 3}, Case{15, 2, 2},
                         Case{4, 3, 2}, Case{5, 4, 2}}) {
        const auto poly = count_hulls(c.n, c.q, c.s);
        const HullEnumeration E = enumerate_hulls_exact(c.n, c.q, c.s);
        for (std::size_t tau = 0; tau < poly.size(); ++tau) {
            const auto it = E.qdim_tally.find(static_cast<i64>(tau));
            const std::uint64_t tally = it == E.qdim_tally.end() ? 0 : it->second;
            EXPECT_EQ(poly[tau], mpz_class(static_cast<unsigned long>(tally)))
                << "n=" << c.n << " q=" << c.q << " s=" << c.s << " tau=" << tau;
        }
    }
}

// ======================================================================
// Averages and bounds
// ======================================================================

TEST(Averages, InternalIdentityAndSpecialForms) {
    for (i64 q : {2, 3, 4, 5}) {
        for (int s = 1; s <= 8; ++s) {
            const DeltaTables T = delta_tables(s);
            for (i64 n = 1; n <= 40; ++n) {
                if (std::gcd(n, q) != 1) continue;
                const i64 B = B_count(n, q);
                // E = (n/2) E(black) - B (E(black)/2 - E(delta)).
                mpq_class expect = mpq_class(n, 2) * T.e_black -
                                   mpq_class(B) * (T.e_black / 2 - T.e_delta);
                expect.canonicalize();
                EXPECT_EQ(average_hull_qdim(n, q, s), expect);
                if (in_Nq(n, q)) {
                    EXPECT_EQ(average_hull_qdim(n, q, s), average_all_symmetric(n, s));
                }
            }
        }
    }
    // Named values.
    EXPECT_EQ(average_hull_qdim(3, 2, 2), mpq_class(1));
    EXPECT_EQ(average_hull_qdim(7, 2, 3), mpq_class(23, 4));
}

TEST(Averages, MatchesExhaustiveMean) {
    for (i64 q : {2, 3, 4}) {
        for (int s : {1, 2, 3}) {
            for (i64 n = 1; n <= 20; ++n) {
                if (std::gcd(n, q) != 1) continue;
                const i64 om = omega_count(n, q);
                u128 states = 1;
                bool small = true;
                for (i64 i = 0; i < om; ++i) {
                    states *= static_cast<u128>(s + 1);
                    if (states > 100000) {
                        small = false;
                        break;
                    }
                }
                if (!small) continue;
                const HullEnumeration E = enumerate_hulls_exact(n, q, s);
                EXPECT_EQ(enumeration_mean(E), average_hull_qdim(n, q, s))
                    << "n=" << n << " q=" << q << " s=" << s;
            }
        }
    }
}

TEST(Averages, BoundsOutsideNq) {
    for (i64 q : {2, 3}) {
        for (int s = 2; s <= 8; ++s) {
            for (i64 n = 2; n <= 300; ++n) {
                if (std::gcd(n, q) != 1 || in_Nq(n, q)) continue;
                const mpq_class E = average_hull_qdim(n, q, s);
                EXPECT_LE(average_bound_lower(n, s), E) << "n=" << n << " q=" << q << " s=" << s;
                EXPECT_LE(E, average_bound_upper(n, s)) << "n=" << n << " q=" << q << " s=" << s;
            }
        }
    }
}

TEST(Averages, ParallelEnumerationAgrees) {
    const HullEnumeration serial = enumerate_hulls_exact(21, 2, 3, 10'000'000, 1);
    const HullEnumeration parallel = enumerate_hulls_exact(21, 2, 3, 10'000'000, 4);
    EXPECT_EQ(serial.total, parallel.total);
    EXPECT_EQ(serial.tuples, parallel.tuples);
    EXPECT_EQ(serial.tuple_tally, parallel.tuple_tally);
    EXPECT_EQ(serial.qdim_tally, parallel.qdim_tally);
}

// ======================================================================
// Achievable dimension set
// ======================================================================

TEST(Aleph, MatchesExhaustiveSupport) {
    EXPECT_EQ(aleph_set(7, 2, 1), (std::set<i64>{0, 3}));
    for (i64 q : {2, 3}) {
        for (int s : {1, 2, 3}) {
            for (i64 n = 1; n <= 16; ++n) {
                if (std::gcd(n, q) != 1) continue;
                const i64 om = omega_count(n, q);
                if (om > 8) continue;
                const HullEnumeration E = enumerate_hulls_exact(n, q, s);
                std::set<i64> support;
                for (const auto& [qd, cnt] : E.qdim_tally) support.insert(qd);
                EXPECT_EQ(aleph_set(n, q, s), support)
                    << "n=" << n << " q=" << q << " s=" << s;
            }
        }
    }
}

// ======================================================================
// Tuple enumerators
// ======================================================================

TEST(Algorithm1, ReproducesPublishedTables) {
    // n = 7 over the 2-adic depth-3 ring.
    EXPECT_EQ(algorithm1(7, 2, 3),
              rows_to_tuples({{{0, 0}, {0, 1, 3, 4, 6, 7}},
                              {{0, 3}, {0, 1}},
                              {{3, 0}, {0, 1}}}));
    // n = 11 over the 3-adic depth-3 ring.
    EXPECT_EQ(algorithm1(11, 3, 3),
              rows_to_tuples({{{0, 0}, {0, 1, 5, 6, 10, 11}},
                              {{0, 5}, {0, 1}},
                              {{5, 0}, {0, 1}}}));
    // n = 21 over the 2-adic depth-3 ring (nine rows).
    EXPECT_EQ(algorithm1(21, 2, 3),
              rows_to_tuples({{{0, 0}, range_inclusive(0, 21)},
                              {{0, 3}, {0, 1, 2, 3, 6, 7, 8, 9, 12, 13, 14, 15}},
                              {{0, 6}, range_inclusive(0, 9)},
                              {{0, 9}, range_inclusive(0, 3)},
                              {{3, 0}, range_inclusive(0, 15)},
                              {{3, 6}, range_inclusive(0, 9)},
                              {{6, 0}, range_inclusive(0, 9)},
                              {{6, 3}, {0, 1, 2, 3, 6}},
                              {{9, 0}, range_inclusive(0, 3)}}));
}

TEST(Algorithm1, ExactForDepthTwoAndAllSymmetric) {
    // s = 2: the recursion provably captures every achievable tuple.
    for (i64 q : {2, 3}) {
        for (i64 n = 1; n <= 21; ++n) {
            if (std::gcd(n, q) != 1 || omega_count(n, q) > 9) continue;
            const HullEnumeration E = enumerate_hulls_exact(n, q, 2);
            EXPECT_EQ(algorithm1(n, q, 2), E.tuples) << "n=" << n << " q=" << q;
        }
    }
    // All-symmetric lengths at s = 3: a single active level, also exact.
    for (i64 q : {2, 3}) {
        for (i64 n : {1, 2, 3, 5, 9}) {
            if (std::gcd(n, q) != 1 || !in_Nq(n, q)) continue;
            const HullEnumeration E = enumerate_hulls_exact(n, q, 3);
            EXPECT_EQ(algorithm1(n, q, 3), E.tuples) << "n=" << n << " q=" << q;
        }
    }
}

TEST(Algorithm1, KnownUnderEnumerationAtDepthThree) {
    // The published recursion misses tuples whose pair contributes at two
    // consecutive levels: for n = 7, q = 2, s = 3 the true set has exactly
    // the two extra tuples (0,3,3) and (0,3,4).
    const auto alg = algorithm1(7, 2, 3);
    const HullEnumeration E = enumerate_hulls_exact(7, 2, 3);
    std::set<std::vector<i64>> missing;
    for (const auto& t : E.tuples)
        if (!alg.count(t)) missing.insert(t);
    EXPECT_EQ(missing,
              (std::set<std::vector<i64>>{{0, 3, 3}, {0, 3, 4}}));
    for (const auto& t : alg) EXPECT_TRUE(E.tuples.count(t));  // soundness holds here
    // The witness: multiset (empty, {1,2,4}, {3,5,6}, {0}) over the depth-3
    // 2-adic ring is its own Euclidean hull with parameters (0,3,3).
    const RingSpec spec = RingSpec::named("Z8");
    const DefiningMultiset A = multiset_make(7, 3, {{}, {1, 2, 4}, {3, 5, 6}, {0}});
    const DefiningMultiset H = hull_multiset(spec, A, 0);
    EXPECT_TRUE(multiset_eq(H, A));
    EXPECT_EQ(multiset_params(H), (std::vector<i64>{0, 3, 3}));
}

TEST(Algorithm1, TupleConstraintAndBudget) {
    // Every exact tuple satisfies 2 k_0 + k_1 + ... + k_{s-1} <= n.
    for (i64 q : {2, 3}) {
        for (i64 n : {7, 15, 16}) {
            if (std::gcd(n, q) != 1) continue;
            for (int s : {2, 3}) {
                const HullEnumeration E = enumerate_hulls_exact(n, q, s);
                for (const auto& k : E.tuples) {
                    i64 acc = 2 * k[0];
                    for (std::size_t t = 1; t < k.size(); ++t) acc += k[t];
                    EXPECT_LE(acc, n);
                }
            }
        }
    }
    EXPECT_THROW(enumerate_hulls_exact(63, 2, 3), BudgetError);
    EXPECT_THROW(algorithm1(21, 2, 3, 10), BudgetError);
}

// ======================================================================
// Combinatorial hull law vs the multiset machinery
// ======================================================================

TEST(CrossCheck, HullParamsMatchMultisetRoute) {
    std::mt19937_64 rng(43);
    for (const std::string name : {"Z4", "Z8", "Z9", "Z27", "F2u2", "GR42"}) {
        const RingSpec spec = RingSpec::named(name);
        for (i64 n : {3, 5, 7, 9, 11, 15}) {
            if (n % spec.p == 0) continue;
            const CosetAtlas atlas = build_atlas(n, spec.q);
            std::uniform_int_distribution<int> dist(0, spec.s);
            for (int rep = 0; rep < 10; ++rep) {
                std::vector<int> rho(atlas.cosets.size());
                for (auto& x : rho) x = dist(rng);
                const DefiningMultiset A = multiset_from_part_indices(atlas, spec.s, rho);
                const DefiningMultiset H = hull_multiset(spec, A, 0);
                EXPECT_EQ(hull_params_of_depths(atlas, spec.s, rho), multiset_params(H));
            }
        }
    }
}

int main(int argc, char** argv) {
    ::testing::InitGoogleTest(&argc, argv);
    return RUN_ALL_TESTS();
}
