#include <gtest/gtest.h>

#include "edgering/conic.hpp"
#include "edgering/errors.hpp"
#include "oracles.hpp"

using namespace edgering;

namespace {

std::set<oracle::Row> as_rows(const ConicRegion& region) {
  std::set<oracle::Row> out;
  for (const RegionInequality& q : region.inequalities) {
    oracle::Row row;
    for (const Integer& c : q.coefficients) row.coefficients.push_back(static_cast<long>(to_int64(c)));
    row.lower = static_cast<long>(to_int64(q.lower));
    row.upper = static_cast<long>(to_int64(q.upper));
    out.insert(row);
  }
  return out;
}

std::vector<Character> k222_conic() {
  std::vector<Character> out;
  for (long a = 1; a <= 3; ++a) {
    out.push_back({1, 1, a});
    out.push_back({-1, -1, -a});
  }
  for (long a = 0; a <= 2; ++a) {
    for (const Character& c : {Character{1, 0, a}, Character{0, 1, a}}) {
      out.push_back(c);
      out.push_back({-c[0], -c[1], -c[2]});
    }
  }
  for (long a = -1; a <= 1; ++a) {
    out.push_back({1, -1, a});
    out.push_back({-1, 1, -a});
    out.push_back({0, 0, a});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Character> k4_conic() {
  std::vector<Character> out{{1, 1, 1, 2}, {-1, -1, -1, -2}, {0, 0, 0, 0}};
  for (int mask = 0; mask < 8; ++mask) {
    Character c{mask & 1, mask >> 1 & 1, mask >> 2 & 1, 1};
    out.push_back(c);
    out.push_back({-c[0], -c[1], -c[2], -c[3]});
  }
  for (int i = 0; i < 3; ++i) {
    Character e(4, 0);
    e[i] = 1;
    out.push_back(e);
    e[i] = -1;
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> sorted_triples(int lo, int hi) {
  std::vector<std::vector<int>> out;
  for (int a = lo; a <= hi; ++a) {
    for (int b = a; b <= hi; ++b) {
      for (int c = b; c <= hi; ++c) out.push_back({a, b, c});
    }
  }
  return out;
}

}  // namespace

TEST(ConicRegion, ThreePartsMatchesExplicitList) {
  for (const auto& r : sorted_triples(2, 4)) {
    const ConicRegion region = conic_region(PartitionSpec(r));
    EXPECT_TRUE(region.certified);
    EXPECT_EQ(as_rows(region), oracle::hand_region(r));
    EXPECT_EQ(region.inequalities.size(), 6u);
  }
}

TEST(ConicRegion, FourPartsMatchesExplicitList) {
  for (int a = 1; a <= 3; ++a) {
    for (int b = a; b <= 3; ++b) {
      for (int c = b; c <= 3; ++c) {
        for (int d = c; d <= 3; ++d) {
          const std::vector<int> r{a, b, c, d};
          EXPECT_EQ(as_rows(conic_region(PartitionSpec(r))), oracle::hand_region(r));
        }
      }
    }
  }
}

TEST(ConicRegion, FamiliesAndCertification) {
  const ConicRegion three = conic_region(PartitionSpec({2, 2, 2}));
  EXPECT_EQ(three.inequalities.front().family, InequalityFamily::Pairwise);
  EXPECT_EQ(three.inequalities.back().family, InequalityFamily::Third);
  EXPECT_FALSE(conic_region(PartitionSpec({1, 1, 1, 1, 1})).certified);
  EXPECT_THROW(conic_region(PartitionSpec({2, 3})), InvalidArgument);
}

TEST(ConicRegion, PublishedLatticePointSets) {
  EXPECT_EQ(conic_lattice_points(PartitionSpec({2, 2, 2})), k222_conic());
  EXPECT_EQ(conic_lattice_points(PartitionSpec({1, 1, 1, 1})), k4_conic());
  EXPECT_EQ(k222_conic().size(), 27u);
  EXPECT_EQ(k4_conic().size(), 25u);
}

TEST(ConicRegion, GridSamplingFindsExactlyTheLatticePoints) {
  for (const auto& [parts, q] : std::vector<std::pair<std::vector<int>, int>>{{{2, 2, 2}, 6}, {{1, 1, 1, 1}, 6}, {{2, 2, 3}, 5}}) {
    const std::set<IntVector> grid = oracle::conic_classes_on_grid(parts, q);
    const std::vector<Character> points = conic_lattice_points(PartitionSpec(parts));
    EXPECT_EQ(std::vector<Character>(grid.begin(), grid.end()), points);
  }
}

TEST(ConicRegion, BoundingBoxContainsEveryPoint) {
  for (const auto& r : sorted_triples(2, 3)) {
    const PartitionSpec spec(r);
    const BoundingBox box = bounding_box(spec);
    std::size_t visited = 0;
    std::size_t inside = 0;
    for_each_box_point(box.inflated(2), [&](const Character& z) {
      ++visited;
      if (!conic_region(spec).contains(z)) return;
      ++inside;
      for (std::size_t i = 0; i < z.size(); ++i) {
        EXPECT_GE(z[i], box.lower[i]);
        EXPECT_LE(z[i], box.upper[i]);
      }
    });
    EXPECT_EQ(visited, box.inflated(2).point_count());
    EXPECT_EQ(inside, conic_lattice_points(spec).size());
  }
  EXPECT_EQ(bounding_box(PartitionSpec({2, 2, 2})).lower, (IntVector{-1, -1, -3}));
  EXPECT_EQ(bounding_box(PartitionSpec({2, 2, 2})).upper, (IntVector{1, 1, 3}));
}

TEST(ConicRegion, ThreePartVerticesMatchClosedForm) {
  for (const auto& r : sorted_triples(2, 4)) {
    const auto vertices = region_vertices(PartitionSpec(r));
    const std::set<RationalVector> expected = oracle::n3_vertices(r[0], r[1], r[2]);
    EXPECT_EQ(std::set<RationalVector>(vertices.begin(), vertices.end()), expected);
    EXPECT_TRUE(std::is_sorted(vertices.begin(), vertices.end()));
  }
}

TEST(ConicFeasibility, WitnessesAreExact) {
  const PartitionSpec spec({2, 2, 2});
  for (const Character& c : conic_lattice_points(spec)) {
    const ConicFeasibility f = is_conic_feasible(spec, c);
    ASSERT_TRUE(f.feasible);
    ASSERT_TRUE(f.witness.has_value());
    RationalVector cr(c.begin(), c.end());
    EXPECT_TRUE(is_conic_witness(spec, cr, *f.witness));
  }
  const ConicFeasibility outside = is_conic_feasible(spec, Character{2, 0, 0});
  EXPECT_FALSE(outside.feasible);
  EXPECT_FALSE(outside.witness.has_value());
}

TEST(ConicFeasibility, WitnessCheckIsHalfOpen) {
  const PartitionSpec spec({2, 2, 2});
  const RationalVector zero(6, Rational(0));
  EXPECT_TRUE(is_conic_witness(spec, {Rational(0), Rational(0), Rational(0)}, zero));
  EXPECT_FALSE(is_conic_witness(spec, {Rational(1), Rational(0), Rational(0)}, zero));
  RationalVector minus_one(6, Rational(0));
  minus_one[0] = -1;
  EXPECT_FALSE(is_conic_witness(spec, {Rational(0), Rational(0), Rational(0)}, minus_one));
}

TEST(ConicFeasibility, VertexWitnessesCombineConvexly) {
  const PartitionSpec spec({2, 2, 3});
  std::vector<VertexWitness> witnesses;
  for (const RationalVector& v : region_vertices(spec)) {
    const ConicFeasibility f = is_conic_feasible(spec, v);
    ASSERT_TRUE(f.feasible);
    witnesses.push_back({v, *f.witness});
  }
  for (const Character& c : conic_lattice_points(spec)) {
    RationalVector cr(c.begin(), c.end());
    const auto x = combine_vertex_witnesses(spec, cr, witnesses);
    ASSERT_TRUE(x.has_value());
    EXPECT_TRUE(is_conic_witness(spec, cr, *x));
  }
  EXPECT_FALSE(combine_vertex_witnesses(spec, {Rational(5), Rational(0), Rational(0)}, witnesses).has_value());
}

TEST(ConicEquivalence, SmallSpecsAgreeOnInflatedBox) {
  for (const auto& parts : std::vector<std::vector<int>>{{2, 2, 2}, {1, 1, 1, 1}, {2, 3, 3}}) {
    const EquivalenceReport report = verify_equivalence(PartitionSpec(parts), 1);
    EXPECT_TRUE(report.passed());
    EXPECT_EQ(report.feasible_count, report.region_count);
    EXPECT_EQ(report.region_count, conic_lattice_points(PartitionSpec(parts)).size());
    EXPECT_EQ(report.points_checked, report.box.point_count());
  }
}
