#include <gtest/gtest.h>

#include <set>

#include "freecum/errors.hpp"
#include "freecum/partition.hpp"
#include "oracles.hpp"

using namespace freecum;

namespace {

Partition to_partition(const oracle::Blocks& b) { return Partition::from_blocks(oracle::element_count(b), b); }

Partition P(const char* text) { return Partition::parse(text); }

}  // namespace

TEST(Partition, TextRoundTrip) {
  const auto p = P("2,4|1,3");
  EXPECT_EQ(p.to_string(), "1,3|2,4");
  EXPECT_EQ(p.block_count(), 2);
  EXPECT_EQ(P("1|2|3").to_string(), "1|2|3");
  EXPECT_EQ(Partition::finest(3).to_string(), "1|2|3");
  EXPECT_EQ(Partition::coarsest(3).to_string(), "1,2,3");
}

TEST(Partition, RejectsMalformedInput) {
  EXPECT_THROW(P("1,2|2"), ParseError);
  EXPECT_THROW(P("1,3"), ParseError);
  EXPECT_THROW(P("1,,2"), ParseError);
  EXPECT_THROW(P("a"), ParseError);
  EXPECT_THROW(Partition::from_rgs({1, 0}), DomainError);
  EXPECT_THROW(Partition::from_rgs({0, 2}), DomainError);
  EXPECT_THROW(Partition::from_blocks(3, {{1, 2}}), DomainError);
}

TEST(Partition, EnumerationMatchesBruteForce) {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::string> expected_all;
    std::set<std::string> expected_nc;
    for (const auto& b : oracle::set_partitions(n)) {
      const auto s = to_partition(b).to_string();
      expected_all.insert(s);
      if (oracle::noncrossing(b)) expected_nc.insert(s);
    }
    std::set<std::string> all;
    std::set<std::string> nc;
    for (const auto& p : enumerate_partitions(n, Family::all)) all.insert(p.to_string());
    for (const auto& p : enumerate_partitions(n, Family::noncrossing)) nc.insert(p.to_string());
    EXPECT_EQ(all, expected_all) << n;
    EXPECT_EQ(nc, expected_nc) << n;
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(all.size())), oracle::bell(n));
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(nc.size())), oracle::catalan(n));
  }
}

TEST(Partition, CountsForLargerN) {
  for (int n = 8; n <= 10; ++n) {
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(enumerate_partitions(n, Family::noncrossing).size())),
              oracle::catalan(n));
  }
  EXPECT_EQ(mpz_class(static_cast<unsigned long>(enumerate_partitions(9, Family::all).size())), oracle::bell(9));
}

TEST(Partition, EnumerationIsLexicographicInRgs) {
  for (auto family : {Family::all, Family::noncrossing}) {
    const auto list = enumerate_partitions(6, family);
    for (std::size_t i = 1; i < list.size(); ++i) {
      const auto a = list[i - 1].rgs();
      const auto b = list[i].rgs();
      EXPECT_TRUE(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
    }
  }
}

TEST(Partition, EnumerationCeiling) {
  EXPECT_THROW(enumerate_partitions(15, Family::noncrossing), SizeLimitError);
  EXPECT_THROW(enumerate_partitions(5, Family::all, 4), SizeLimitError);
}

TEST(Partition, NoncrossingAgreesWithPatternSearch) {
  for (const auto& b : oracle::set_partitions(8)) {
    ASSERT_EQ(is_noncrossing(to_partition(b)), oracle::noncrossing(b)) << to_partition(b).to_string();
  }
  EXPECT_FALSE(is_noncrossing(P("1,3|2,4")));
  EXPECT_TRUE(is_noncrossing(P("1,4|2,3")));
}

TEST(Partition, MeetJoinRefinesAgreeWithBruteForce) {
  const auto all = oracle::set_partitions(5);
  for (const auto& a : all) {
    for (const auto& b : all) {
      const auto pa = to_partition(a);
      const auto pb = to_partition(b);
      ASSERT_EQ(refines(pa, pb), oracle::finer(a, b));
      ASSERT_EQ(meet(pa, pb), to_partition(oracle::meet(a, b)));
      ASSERT_EQ(join(pa, pb), to_partition(oracle::join(a, b)));
      const auto mj = lattice_meet_join(pa, pb);
      ASSERT_EQ(mj.meet, meet(pa, pb));
      ASSERT_EQ(mj.join, join(pa, pb));
      ASSERT_EQ(mj.leq, refines(pa, pb));
    }
  }
}

TEST(Partition, JoinExamples) {
  EXPECT_EQ(join(P("1,2|3|4"), P("1|2,3|4")).to_string(), "1,2,3|4");
  EXPECT_EQ(meet(P("1,2,3|4"), P("1,3,4|2")).to_string(), "1,3|2|4");
  EXPECT_THROW(join(P("1|2"), P("1|2|3")), DomainError);
}

TEST(Partition, KrewerasMatchesMaximalInterweaveOracle) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& b : oracle::nc_partitions(n)) {
      ASSERT_EQ(kreweras(to_partition(b)), to_partition(oracle::kreweras(b))) << to_partition(b).to_string();
    }
  }
}

TEST(Partition, KrewerasExamples) {
  EXPECT_EQ(kreweras(Partition::finest(4)), Partition::coarsest(4));
  EXPECT_EQ(kreweras(Partition::coarsest(4)), Partition::finest(4));
  EXPECT_EQ(kreweras(P("1,2|3,4")).to_string(), "1|2,4|3");
  EXPECT_EQ(kreweras(P("1,4|2,3")).to_string(), "1,3|2|4");
  EXPECT_THROW(kreweras(P("1,3|2,4")), DomainError);
}

TEST(Partition, KrewerasSquaredIsRotation) {
  // K²(π) is π rotated by one step.
  for (const auto& pi : enumerate_partitions(6, Family::noncrossing)) {
    const auto k2 = kreweras(kreweras(pi));
    for (int i = 1; i <= 6; ++i) {
      for (int j = 1; j <= 6; ++j) {
        const int ri = (i + 4) % 6 + 1;
        const int rj = (j + 4) % 6 + 1;
        ASSERT_EQ(pi.same_block(i, j), k2.same_block(ri, rj)) << pi.to_string();
      }
    }
  }
}

TEST(Partition, Interweave) {
  EXPECT_EQ(interweave(P("1,2"), P("1|2")).to_string(), "1,3|2|4");
  EXPECT_TRUE(is_noncrossing(interweave(P("1,2|3"), kreweras(P("1,2|3")))));
  EXPECT_THROW(interweave(P("1"), P("1|2")), DomainError);
}

TEST(Partition, MergeNeighbours) {
  EXPECT_EQ(merge_neighbours(P("1,2|3"), 1).to_string(), "1|2");
  EXPECT_EQ(merge_neighbours(P("1,3|2|4"), 2).to_string(), "1,2|3");
  EXPECT_THROW(merge_neighbours(P("1|2"), 2), DomainError);
  EXPECT_THROW(merge_neighbours(P("1|2"), 0), DomainError);
}

TEST(Partition, InducedGrouping) {
  const std::vector<int> sizes{2, 1};
  EXPECT_EQ(induced_grouping(P("1|2"), sizes).to_string(), "1,2|3");
  EXPECT_EQ(induced_grouping(P("1,2"), sizes).to_string(), "1,2,3");
  const std::vector<int> sizes3{1, 2, 1};
  EXPECT_EQ(induced_grouping(P("1,3|2"), sizes3).to_string(), "1,4|2,3");
  EXPECT_THROW(induced_grouping(P("1|2"), std::vector<int>{1}), DomainError);
}

TEST(Partition, RestrictAndQuotient) {
  const std::vector<int> subset{2, 4, 5};
  EXPECT_EQ(restrict_to(P("1,2|3,4,5"), subset).to_string(), "1|2,3");
  EXPECT_EQ(quotient(P("1,2,3|4,5"), P("1|2,3|4|5")).to_string(), "1,2|3,4");
  EXPECT_THROW(quotient(P("1|2,3"), P("1,2|3")), DomainError);
}

TEST(Partition, KernelAndCanonicalIndex) {
  EXPECT_EQ(kernel(IndexFunction{{5, 2, 5, 7}}).to_string(), "1,3|2|4");
  for (const auto& pi : enumerate_partitions(5, Family::all)) EXPECT_EQ(kernel(canonical_index(pi)), pi);
}

TEST(Partition, ShapePredicates) {
  const auto a = shape_predicates(P("1,2,3"));
  EXPECT_EQ(a.connected_neighbours, 2);
  EXPECT_FALSE(a.alternating);
  EXPECT_TRUE(a.singletons.empty());
  const auto b = shape_predicates(P("1,3|2,4"));
  EXPECT_EQ(b.connected_neighbours, 0);
  EXPECT_TRUE(b.alternating);
  const auto c = shape_predicates(P("1,3|2|4"));
  EXPECT_EQ(c.singletons, (std::vector<int>{2, 4}));
  EXPECT_TRUE(c.has_singleton);
}

TEST(Partition, BlockSizeProfile) {
  EXPECT_EQ(block_size_profile(P("1,3|2|4,5,6")), (std::vector<int>{0, 1, 1, 1, 0, 0, 0}));
}

TEST(Partition, HashAndOrder) {
  std::hash<Partition> h;
  EXPECT_EQ(h(P("1,2|3")), h(P("3|2,1")));
  EXPECT_LT(P("1|2"), P("1|2|3"));
  EXPECT_LT(P("1,2|3"), P("1|2,3"));
}
