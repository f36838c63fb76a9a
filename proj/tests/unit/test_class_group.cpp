#include <gtest/gtest.h>

#include <random>

#include "edgering/class_group.hpp"
#include "edgering/edge_polytope.hpp"
#include "edgering/errors.hpp"
#include "edgering/fixtures.hpp"
#include "edgering/smith.hpp"
#include "generators.hpp"

using namespace edgering;

namespace {

/// <sigma, e_a + e_b> for every facet form: the weight vector by definition.
IntVector weight_by_evaluation(const FacetSystem& f, const Edge& e) {
  LatticePoint x(f.dim, 0);
  x[e.a - 1] = 1;
  x[e.b - 1] = 1;
  IntVector w;
  for (const FacetForm& form : f.forms) {
    const Rational v = form.evaluate(x);
    EXPECT_TRUE(is_integral(v));
    w.push_back(numerator(v));
  }
  return w;
}

std::vector<IntVector> sorted(std::vector<IntVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

const std::vector<std::vector<int>> kSmallSpecs{{2, 2, 2}, {1, 1, 1, 1}, {2, 2, 3}, {2, 3, 4}, {1, 1, 2, 3},
                                                {1, 2, 2, 2, 3}, {3, 3, 3}, {1, 1, 1, 1, 1}};

}  // namespace

TEST(ClassMatrix, K222MatchesPublishedMatrix) {
  const IntegerMatrix expected{
      {1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0},
      {1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0}, {0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1},
      {0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0}, {0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1},
      {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1}, {0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0},
      {1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0}};
  const IntegerMatrix m = class_matrix(PartitionSpec({2, 2, 2}));
  EXPECT_EQ(m, expected);
  const SmithDecomposition s = smith_normal_form(m);
  EXPECT_EQ(s.rank(), 6u);
  EXPECT_EQ(s.diagonals, std::vector<Integer>(6, 1));
}

TEST(ClassMatrix, ClosedFormWeightsEqualFacetEvaluations) {
  for (const auto& parts : kSmallSpecs) {
    const PartitionSpec spec(parts);
    const FacetSystem f = facet_system(spec);
    const Graph g = build_complete_multipartite(spec);
    for (const Edge& e : g.edges()) {
      EXPECT_EQ(weight_vector(spec, e).entries, weight_by_evaluation(f, e));
    }
  }
  EXPECT_THROW(weight_vector(PartitionSpec({2, 2, 2}), Edge{1, 2}), InvalidArgument);
}

TEST(ClassGroup, BothRoutesGiveFreeRankN) {
  for (const auto& parts : kSmallSpecs) {
    const PartitionSpec spec(parts);
    const GroupInvariants a = class_group_from_class_matrix(spec);
    const GroupInvariants b = class_group_from_tau(spec);
    EXPECT_TRUE(a.same_group(b));
    EXPECT_EQ(a.free_rank, parts.size());
    EXPECT_TRUE(a.torsion.empty());
    EXPECT_EQ(a.relation_rank, spec.vertex_count());
    const ClassGroupStructure g = class_group(spec);
    EXPECT_EQ(g.free_rank, parts.size());
    EXPECT_EQ(g.divisor_images.size(), spec.vertex_count() + parts.size());
  }
}

TEST(ClassGroup, K222FundamentalFirstImages) {
  const ClassGroupStructure g = class_group(PartitionSpec({2, 2, 2}), BasisConvention::FundamentalFirst);
  const std::vector<IntVector> expected{{0, -1, -1}, {0, -1, -1}, {-1, 0, -1}, {-1, 0, -1}, {0, 0, 1},
                                        {1, 1, 2},   {1, 0, 0},   {0, 1, 0},   {0, 0, 1}};
  EXPECT_EQ(g.divisor_images, expected);
  EXPECT_EQ(g.basis_divisors, (std::vector<std::size_t>{6, 7, 8}));
}

TEST(ClassGroup, K4VertexFirstMultiset) {
  const ClassGroupStructure g = class_group(PartitionSpec({1, 1, 1, 1}), BasisConvention::VertexFirst);
  const std::vector<IntVector> expected{{1, 0, 0, 0},  {0, 1, 0, 0},   {0, 0, 1, 0},   {0, 0, 0, 1},
                                        {1, 1, 1, 2},  {0, -1, -1, -1}, {-1, 0, -1, -1}, {-1, -1, 0, -1}};
  EXPECT_EQ(sorted(g.divisor_images), sorted(expected));
}

TEST(ClassGroup, FixtureMultisetsAreReproduced) {
  for (const std::string& name : instance_names()) {
    const NCCRInstance inst = load_instance(name);
    EXPECT_EQ(sorted(class_group(inst.spec, inst.convention).divisor_images), sorted(inst.beta_multiset)) << name;
  }
}

TEST(ClassGroup, RelationsHoldUnderBothConventions) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const PartitionSpec spec = gen::random_supported_spec(rng);
    for (BasisConvention c : {BasisConvention::FundamentalFirst, BasisConvention::VertexFirst}) {
      const ClassGroupStructure g = class_group(spec, c);
      EXPECT_TRUE(divisor_relations_hold(spec, g.divisor_images));
      IntegerMatrix basis(g.basis_divisors.size(), g.basis_divisors.size());
      for (std::size_t i = 0; i < g.basis_divisors.size(); ++i) {
        for (std::size_t k = 0; k < g.basis_divisors.size(); ++k) basis(k, i) = g.divisor_images[g.basis_divisors[i]][k];
      }
      EXPECT_EQ(basis, IntegerMatrix::identity(spec.part_count()));
    }
    std::vector<IntVector> broken = class_group(spec).divisor_images;
    broken[0][0] += 1;
    EXPECT_FALSE(divisor_relations_hold(spec, broken));
  }
}

TEST(ClassGroup, ConventionTransformIsUnimodular) {
  for (const auto& parts : kSmallSpecs) {
    const PartitionSpec spec(parts);
    const IntegerMatrix t = convention_transform(spec);
    EXPECT_EQ(abs(determinant(t)), 1);
    const ClassGroupStructure ff = class_group(spec, BasisConvention::FundamentalFirst);
    const ClassGroupStructure vf = class_group(spec, BasisConvention::VertexFirst);
    for (std::size_t j = 0; j < ff.divisor_images.size(); ++j) {
      EXPECT_EQ(t * ff.divisor_images[j], vf.divisor_images[j]);
    }
  }
  EXPECT_EQ(convention_transform(PartitionSpec({2, 2, 2})), (IntegerMatrix{{0, -1, 0}, {-1, 0, 0}, {-1, -1, 1}}));
}

TEST(ClassGroup, ConventionNames) {
  EXPECT_EQ(parse_convention("vertex-first"), BasisConvention::VertexFirst);
  EXPECT_EQ(to_string(BasisConvention::FundamentalFirst), "fundamental-first");
  EXPECT_THROW(parse_convention("other"), InvalidArgument);
  EXPECT_THROW(class_group(PartitionSpec({1, 3, 3})), UnsupportedSpec);
}

TEST(DependencyWitness, EvenCycleAlternates) {
  const PartitionSpec spec({2, 2, 2});
  DependencyConfiguration c;
  c.first_cycle = cycle_from_vertices({1, 3, 2, 4});
  const DependencyWitness w = dependency_witness(spec, c);
  EXPECT_EQ(w.coefficients, (std::vector<Integer>{-1, 1, -1, 1}));
}

TEST(DependencyWitness, RejectsMalformedConfigurations) {
  const PartitionSpec spec({2, 2, 2});
  DependencyConfiguration odd;
  odd.first_cycle = cycle_from_vertices({1, 3, 5});
  EXPECT_THROW(dependency_witness(spec, odd), InvalidArgument);

  DependencyConfiguration non_edge;
  non_edge.first_cycle = cycle_from_vertices({1, 2, 3, 4});
  EXPECT_THROW(dependency_witness(spec, non_edge), InvalidArgument);

  DependencyConfiguration overlapping;
  overlapping.kind = DependencyKind::OddCyclesSharingVertex;
  overlapping.first_cycle = cycle_from_vertices({1, 3, 5});
  overlapping.second_cycle = cycle_from_vertices({1, 3, 6});
  EXPECT_THROW(dependency_witness(spec, overlapping), InvalidArgument);

  DependencyConfiguration touching;
  touching.kind = DependencyKind::OddCyclesJoinedByPath;
  touching.first_cycle = cycle_from_vertices({1, 3, 5});
  touching.second_cycle = cycle_from_vertices({2, 4, 6});
  touching.path = path_from_vertices({1, 5, 2});
  EXPECT_THROW(dependency_witness(spec, touching), InvalidArgument);
}

TEST(DependencyWitness, RandomConfigurationsAnnihilate) {
  std::mt19937 rng(99);
  const DependencyKind kinds[] = {DependencyKind::EvenCycle, DependencyKind::OddCyclesSharingVertex,
                                  DependencyKind::OddCyclesJoinedByPath};
  for (int trial = 0; trial < 60; ++trial) {
    const gen::Sample s = gen::random_configuration(rng, kinds[trial % 3]);
    const DependencyWitness w = dependency_witness(s.spec, s.configuration);
    const FacetSystem f = facet_system(s.spec);
    IntVector total(f.size(), 0);
    ASSERT_EQ(w.edges.size(), w.coefficients.size());
    bool nonzero = false;
    for (std::size_t k = 0; k < w.edges.size(); ++k) {
      const IntVector we = weight_by_evaluation(f, w.edges[k]);
      for (std::size_t i = 0; i < total.size(); ++i) total[i] += w.coefficients[k] * we[i];
      nonzero = nonzero || w.coefficients[k] != 0;
    }
    EXPECT_TRUE(nonzero);
    EXPECT_EQ(total, IntVector(f.size(), 0)) << "trial " << trial;
  }
}
