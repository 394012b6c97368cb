#include <gtest/gtest.h>

#include "circulant/families.hpp"
#include "circulant/oracle.hpp"

using namespace circulant;

namespace {

std::vector<std::vector<Int>> lists(const FamilyInstance& f) {
  std::vector<std::vector<Int>> out;
  for (const auto& s : f.sets) out.push_back(s.jumps());
  return out;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::VerificationFailure;
}

}  // namespace

TEST(FamilyM2, Examples) {
  const auto a = family_m2(2, 1);
  EXPECT_EQ(a.order, 16);
  EXPECT_EQ(lists(a), (std::vector<std::vector<Int>>{{1, 2, 7}, {2, 3, 5}}));
  const auto b = family_m2(2, 2);
  EXPECT_EQ(lists(b), (std::vector<std::vector<Int>>{{2, 3, 5}, {1, 2, 7}}));
  EXPECT_EQ(kind_of([] { family_m2(1, 1); }), ErrorKind::InvalidFamilyParams);
  EXPECT_EQ(kind_of([] { family_m2(3, 2); }), ErrorKind::DegenerateFamily);
  EXPECT_EQ(kind_of([] { family_m2(3, 4); }), ErrorKind::InvalidFamilyParams);
}

TEST(FamilyM2General, Examples) {
  EXPECT_EQ(lists(family_m2_general(2, 1, {1}, 1)),
            (std::vector<std::vector<Int>>{{1, 2, 7}, {2, 3, 5}}));
  const auto f = family_m2_general(3, 1, {1}, 1);
  EXPECT_EQ(f.order, 24);
  EXPECT_EQ(lists(f), (std::vector<std::vector<Int>>{{1, 2, 11}, {2, 5, 7}}));
  EXPECT_EQ(f.claim, FamilyClaim::Type1OrType2);
  EXPECT_EQ(kind_of([] { family_m2_general(3, 1, {2}, 1); }), ErrorKind::InvalidFamilyParams);
  EXPECT_EQ(kind_of([] { family_m2_general(3, 1, {1, 3}, 2); }), ErrorKind::InvalidFamilyParams);
  const auto rep = family_verify(f);
  EXPECT_EQ(rep.resolved, ResolvedClaim::Type2);
}

TEST(FamilyM3, Examples) {
  EXPECT_EQ(lists(family_m3(1)),
            (std::vector<std::vector<Int>>{{1, 3, 8, 10}, {3, 4, 5, 13}, {2, 3, 7, 11}}));
  EXPECT_EQ(family_m3(2).sets.front().jumps(), (std::vector<Int>{1, 3, 17, 19}));
  EXPECT_EQ(family_m3(4).sets.front().jumps(), (std::vector<Int>{1, 3, 35, 37}));
  EXPECT_EQ(family_m3(4).order, 108);
}

TEST(FamilyM3General, Examples) {
  EXPECT_EQ(family_m3_general(2, {2}).sets.front().jumps(), (std::vector<Int>{1, 6, 17, 19}));
  const auto l = family_m3_general(2, {6});
  EXPECT_EQ(l.sets.front().jumps(), (std::vector<Int>{1, 17, 18, 19}));
  EXPECT_FALSE(l.notes.empty());
  const auto rep = family_verify(l);
  EXPECT_EQ(rep.resolved, ResolvedClaim::Type1);
  EXPECT_EQ(rep.t2_members.size(), 1U);
  EXPECT_EQ(kind_of([] { family_m3_general(2, {}); }), ErrorKind::InvalidFamilyParams);
}

TEST(FamilyM5, Examples) {
  const auto f = family_m5(1);
  EXPECT_EQ(f.order, 125);
  EXPECT_EQ(f.sets.size(), 5U);
  EXPECT_EQ(f.sets.front().jumps(), (std::vector<Int>{1, 5, 24, 26, 49, 51}));
  EXPECT_EQ(f.relations.size(), 20U);
  EXPECT_EQ(family_verify(f).group_order, 5);
  EXPECT_EQ(family_m5(2).order, 250);
  EXPECT_EQ(family_verify(family_m5_general(1, {1})).resolved, ResolvedClaim::Type2);
}

TEST(FamilyM7, Examples) {
  const auto f = family_m7(1);
  EXPECT_EQ(f.order, 343);
  EXPECT_EQ(f.sets.front().jumps(), (std::vector<Int>{1, 7, 48, 50, 97, 99, 146, 148}));
  const FamilyRelation wrap{6, 1, 0};
  EXPECT_NE(std::find(f.relations.begin(), f.relations.end(), wrap), f.relations.end());
  const auto big = family_m7(5);
  EXPECT_EQ(big.order, 1715);
  EXPECT_TRUE(big.sets[2].contains(71));
}

TEST(FamilyGeneralP, Problem64) {
  const auto f = family_general_p({7, 5, 3, 2});
  EXPECT_EQ(f.order, 1715);
  EXPECT_EQ(GeneralPParams({7, 5, 3, 2}).d(1), 17);
  EXPECT_EQ(f.sets.front().jumps(), (std::vector<Int>{7, 17, 228, 262, 473, 507, 718, 752}));
  const auto rep = family_verify(f, {100'000, 4});
  EXPECT_EQ(rep.group_order, 7);
  EXPECT_EQ(rep.group_generator, 5);
  EXPECT_TRUE(rep.t2_matches_sets);
  EXPECT_TRUE(rep.type1_pairs.empty());
}

TEST(FamilyGeneralP, SmallPrime) {
  const auto f = family_general_p({3, 1, 1, 0});
  EXPECT_EQ(f.order, 27);
  EXPECT_EQ(lists(f), lists(family_m3(1)));
  EXPECT_EQ(family_verify(f).group_order, 3);
}

TEST(FamilyGeneralP, Bounds) {
  EXPECT_EQ(kind_of([] { family_general_p({7, 5, 0, 2}); }), ErrorKind::InvalidFamilyParams);
  EXPECT_EQ(kind_of([] { family_general_p({4, 1, 1, 0}); }), ErrorKind::InvalidFamilyParams);
  EXPECT_EQ(kind_of([] { family_general_p({3, 1, 1, 3}); }), ErrorKind::InvalidFamilyParams);
  EXPECT_EQ(kind_of([] { family_general_p({3, 0, 1, 0}); }), ErrorKind::InvalidFamilyParams);
}

TEST(FamilyVerify, RejectsBrokenRelation) {
  auto f = family_m2(2, 1);
  f.relations.push_back({1, 0, 1});
  EXPECT_EQ(kind_of([&] { family_verify(f); }), ErrorKind::VerificationFailure);
}

TEST(FamilyVerify, ClaimType2RejectsType1Pair) {
  auto f = family_m3_general(2, {6});
  f.claim = FamilyClaim::Type2;
  EXPECT_EQ(kind_of([&] { family_verify(f); }), ErrorKind::VerificationFailure);
}

TEST(FamilyVerify, OrderBudget) {
  EXPECT_EQ(kind_of([] { family_verify(family_m7(5), {1000, 1}); }), ErrorKind::BudgetExceeded);
}

TEST(Families, SharedGcdSignature) {
  for (const auto& f : {family_m2(4, 1), family_m3(3), family_m5(1), family_m7(1),
                        family_general_p({5, 2, 2, 3}), family_m3_general(1, {1, 2})}) {
    const auto base = CirculantGraph(f.sets.front());
    for (const auto& s : f.sets) {
      EXPECT_TRUE(gcd_signature_check(base, CirculantGraph(s))) << f.kind;
      EXPECT_EQ(s.size(), base.jumps().size());
    }
  }
}

TEST(Families, GeneratedInstancesVerify) {
  for (Int n = 1; n <= 2; ++n) {
    EXPECT_NO_THROW(family_verify(family_m5(n))) << n;
  }
  EXPECT_NO_THROW(family_verify(family_m7(1)));
  for (Int x = 1; x <= 4; ++x) {
    const auto rep = family_verify(family_general_p({5, 1, x, 1}));
    EXPECT_EQ(rep.group_order, 5);
    EXPECT_EQ(rep.group_generator, 1);
  }
}
