#include <gtest/gtest.h>

#include "circulant/oracle.hpp"
#include "support.hpp"

using namespace circulant;

TEST(GcdSignature, Examples) {
  EXPECT_TRUE(gcd_signature_check(make_circulant(16, {1, 2, 7}), make_circulant(16, {2, 3, 5})));
  EXPECT_FALSE(gcd_signature_check(make_circulant(16, {1, 2, 7}), make_circulant(16, {1, 3, 5})));
  const auto g = make_circulant(54, {2, 3, 16, 20});
  EXPECT_TRUE(gcd_signature_check(g, g));
  EXPECT_EQ(gcd_signature(g).total(), 4U);
  EXPECT_THROW(gcd_signature_check(g, make_circulant(16, {1})), Error);
}

TEST(Spectrum, Examples) {
  EXPECT_EQ(spectral_fingerprint(make_circulant(4, {1})), (std::vector<double>{-2, 0, 0, 2}));
  EXPECT_TRUE(spectra_match(spectral_fingerprint(make_circulant(16, {1, 2, 7})),
                            spectral_fingerprint(make_circulant(16, {2, 3, 5}))));
  EXPECT_FALSE(spectra_match(spectral_fingerprint(make_circulant(8, {1})),
                             spectral_fingerprint(make_circulant(8, {2}))));
}

TEST(Spectrum, LargestIsDegree) {
  for (Int n : {7, 8, 16, 20}) {
    for (const auto& r : ref::all_jump_sets(n, 2)) {
      const auto g = make_circulant(n, r);
      const auto eig = spectral_fingerprint(g);
      EXPECT_DOUBLE_EQ(eig.back(), static_cast<double>(g.degree()));
    }
  }
}

TEST(BruteForce, Examples) {
  const auto w = brute_force_isomorphic(make_circulant(16, {1, 2, 7}), make_circulant(16, {2, 3, 5}));
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->verified);
  EXPECT_FALSE(brute_force_isomorphic(make_circulant(8, {1}), make_circulant(8, {2})));
  const auto g = make_circulant(12, {1, 5});
  const auto id = brute_force_isomorphic(g, g);
  ASSERT_TRUE(id);
  EXPECT_TRUE(verify_permutation(edge_set(g), edge_set(g), id->permutation));
}

TEST(BruteForce, CapAndBudget) {
  const auto big = make_circulant(30, {1, 2});
  try {
    brute_force_isomorphic(big, big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
  EXPECT_TRUE(brute_force_isomorphic(big, big, {30, 1'000'000}));
  try {
    brute_force_isomorphic(make_circulant(16, {1, 2, 7}), make_circulant(16, {1, 3, 5}), {24, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(BruteForce, AgreesWithUnitMultipliersOnPrimeOrder) {
  // For prime n every isomorphism between circulants is a unit multiplier.
  const Int n = 13;
  const auto sets = ref::all_jump_sets(n, 2);
  for (const auto& a : sets) {
    const auto t1 = ref::type1_members(n, a);
    for (const auto& b : sets) {
      const bool iso = brute_force_isomorphic(make_circulant(n, a), make_circulant(n, b)).has_value();
      ASSERT_EQ(iso, t1.count(b) == 1);
    }
  }
}

TEST(VerifyPermutation, RejectsNonBijection) {
  const auto e = edge_set(make_circulant(4, {1}));
  EXPECT_FALSE(verify_permutation(e, e, {0, 0, 1, 2}));
  EXPECT_FALSE(verify_permutation(e, e, {0, 1, 2}));
  EXPECT_TRUE(verify_permutation(e, e, {0, 1, 2, 3}));
  EXPECT_FALSE(verify_permutation(e, e, {0, 2, 1, 3}));
}

TEST(VerifyThetaWitness, Examples) {
  EXPECT_TRUE(verify_theta_witness(54, 3, 2, make_circulant(54, {2, 3, 16, 20}),
                                   make_circulant(54, {3, 4, 14, 22}))
                  .verified);
  const auto g = make_circulant(27, {1, 3, 8, 10});
  EXPECT_TRUE(verify_theta_witness(27, 3, 0, g, g).verified);
  try {
    verify_theta_witness(54, 3, 1, make_circulant(54, {2, 3, 16, 20}),
                         make_circulant(54, {3, 4, 14, 22}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::VerificationFailure);
  }
}
