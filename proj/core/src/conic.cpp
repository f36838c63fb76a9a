#include "edgering/conic.hpp"

#include "edgering/edge_polytope.hpp"
#include "edgering/errors.hpp"
#include "edgering/linear_feasibility.hpp"
#include "edgering/rational_linear.hpp"
#include "edgering/simplex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <thread>

namespace edgering {
namespace {

// Nondecreasing sequences of length k over `allowed` (sorted).
void for_each_multiset(const std::vector<std::size_t>& allowed, std::size_t k,
                       const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> recurse = [&](std::size_t from) {
    if (current.size() == k) {
      visit(current);
      return;
    }
    for (std::size_t i = from; i < allowed.size(); ++i) {
      current.push_back(allowed[i]);
      recurse(i);
      current.pop_back();
    }
  };
  recurse(0);
}

// Nonempty subsets of {0..m-1} of size k, lexicographic.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t m, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> recurse = [&](std::size_t from) {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = from; i < m; ++i) {
      current.push_back(i);
      recurse(i + 1);
      current.pop_back();
    }
  };
  recurse(0);
  return out;
}

Rational evaluate(const IntVector& coefficients, const RationalVector& z) {
  Rational s = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (coefficients[i] != 0) s += Rational(coefficients[i]) * z[i];
  }
  return s;
}

RationalVector to_rational(const IntVector& v) { return RationalVector(v.begin(), v.end()); }

void add_family(const PartitionSpec& spec, bool third, ConicRegion& region) {
  const std::size_t n = spec.part_count();
  for (std::size_t size = 1; size <= n - 1; ++size) {
    for (const auto& I : subsets_of_size(n - 1, size)) {
      std::vector<std::size_t> allowed;
      const std::size_t limit = third ? n : n - 1;
      for (std::size_t j = 0; j < limit; ++j) {
        if (std::find(I.begin(), I.end(), j) == I.end()) allowed.push_back(j);
      }
      Integer rest = 0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::find(I.begin(), I.end(), i) == I.end()) rest += spec.part_size(i);
      }
      for_each_multiset(allowed, size - 1, [&](const std::vector<std::size_t>& J) {
        if (third && std::find(J.begin(), J.end(), n - 1) == J.end()) return;
        RegionInequality row;
        row.coefficients.assign(n, 0);
        for (std::size_t i : I) row.coefficients[i] += 1;
        Integer j_sum = 0;
        for (std::size_t j : J) {
          row.coefficients[j] -= 1;
          j_sum += spec.part_size(j);
        }
        const Integer j_size = static_cast<long>(J.size());
        row.lower = -j_size - rest - j_sum + (third ? 2 : 1);
        row.upper = third ? j_size : j_size + 1;
        row.family = third ? InequalityFamily::Third : InequalityFamily::Second;
        region.inequalities.push_back(std::move(row));
      });
    }
  }
}

}  // namespace

std::string to_string(InequalityFamily family) {
  switch (family) {
    case InequalityFamily::Pairwise: return "pairwise";
    case InequalityFamily::Second: return "second";
    case InequalityFamily::Third: return "third";
  }
  return "unknown";
}

bool RegionInequality::contains(const RationalVector& z) const {
  const Rational value = evaluate(coefficients, z);
  return Rational(lower) <= value && value <= Rational(upper);
}

bool ConicRegion::contains(const RationalVector& z) const {
  if (z.size() != n) throw InvalidArgument("ConicRegion::contains: dimension mismatch");
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [&](const RegionInequality& row) { return row.contains(z); });
}

bool ConicRegion::contains(const Character& z) const { return contains(to_rational(z)); }

ConicRegion conic_region(const PartitionSpec& spec) {
  const std::size_t n = spec.part_count();
  if (n <= 2) throw InvalidArgument("conic_region: needs at least three parts");
  ConicRegion region;
  region.n = n;
  region.certified = n <= 4;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      RegionInequality row;
      row.coefficients.assign(n, 0);
      row.coefficients[i] = 1;
      row.coefficients[j] = -1;
      row.lower = -spec.part_size(j);
      row.upper = spec.part_size(i);
      row.family = InequalityFamily::Pairwise;
      region.inequalities.push_back(std::move(row));
    }
  }
  add_family(spec, false, region);
  add_family(spec, true, region);
  return region;
}

std::size_t BoundingBox::point_count() const {
  std::size_t count = 1;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (upper[i] < lower[i]) return 0;
    count *= static_cast<std::size_t>(to_int64(upper[i] - lower[i] + 1));
  }
  return count;
}

BoundingBox BoundingBox::inflated(const Integer& margin) const {
  BoundingBox out = *this;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    out.lower[i] -= margin;
    out.upper[i] += margin;
  }
  return out;
}

BoundingBox bounding_box(const PartitionSpec& spec) {
  const std::size_t n = spec.part_count();
  if (n <= 2) throw InvalidArgument("bounding_box: needs at least three parts");
  BoundingBox box;
  box.lower.assign(n, 0);
  box.upper.assign(n, 0);
  Integer head_total = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) head_total += spec.part_size(i);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    box.lower[i] = -(head_total - spec.part_size(i)) + 1;
    box.upper[i] = 1;
  }
  // z_n >= z_i - r_i and z_n <= z_i + r_n for every i < n.
  Integer low = box.lower[0] - spec.part_size(0);
  for (std::size_t i = 1; i + 1 < n; ++i) low = std::max(low, Integer(box.lower[i] - spec.part_size(i)));
  box.lower[n - 1] = low;
  box.upper[n - 1] = 1 + spec.part_size(n - 1);
  return box;
}

std::vector<Character> conic_lattice_points(const PartitionSpec& spec) {
  const ConicRegion region = conic_region(spec);
  std::vector<Character> out;
  for_each_box_point(bounding_box(spec), [&](const Character& z) {
    if (region.contains(z)) out.push_back(z);
  });
  return out;
}

std::vector<RationalVector> region_vertices(const PartitionSpec& spec) {
  const ConicRegion region = conic_region(spec);
  const std::size_t n = region.n;
  struct Hyperplane {
    RationalVector normal;
    Rational value;
  };
  std::vector<Hyperplane> planes;
  for (const RegionInequality& row : region.inequalities) {
    planes.push_back({to_rational(row.coefficients), Rational(row.lower)});
    planes.push_back({to_rational(row.coefficients), Rational(row.upper)});
  }
  std::vector<RationalVector> out;
  for (const auto& choice : subsets_of_size(planes.size(), n)) {
    RationalRows a;
    RationalVector b;
    for (std::size_t k : choice) {
      a.push_back(planes[k].normal);
      b.push_back(planes[k].value);
    }
    auto point = solve_square(std::move(a), std::move(b));
    if (point && region.contains(*point)) out.push_back(std::move(*point));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ConicFeasibility is_conic_feasible(const PartitionSpec& spec, const RationalVector& c) {
  const TauSystem tau = tau_system(spec);
  const std::size_t d = tau.dim;
  const std::size_t n = spec.part_count();
  if (c.size() != n) throw InvalidArgument("is_conic_feasible: character has the wrong length");
  StrictLinearSystem system(d);
  for (std::size_t i = 0; i < d; ++i) {
    RationalVector unit(d, 0);
    unit[i] = 1;
    system.add(unit, Relation::LessEqual, 0);
    system.add_lower(unit, Relation::Less, -1);
  }
  for (std::size_t j = 0; j < n; ++j) {
    const RationalVector form = to_rational(tau.forms[d + j]);
    system.add(form, Relation::LessEqual, c[j]);
    system.add_lower(form, Relation::Less, c[j] - 1);
  }
  ConicFeasibility out;
  out.witness = feasible_with_strict(system);
  out.feasible = out.witness.has_value();
  return out;
}

ConicFeasibility is_conic_feasible(const PartitionSpec& spec, const Character& c) {
  return is_conic_feasible(spec, to_rational(c));
}

bool is_conic_witness(const PartitionSpec& spec, const RationalVector& c, const RationalVector& x) {
  const TauSystem tau = tau_system(spec);
  const std::size_t d = tau.dim;
  if (x.size() != d || c.size() != spec.part_count()) return false;
  for (const Rational& xi : x) {
    if (!(xi > -1 && xi <= 0)) return false;
  }
  for (std::size_t j = 0; j < c.size(); ++j) {
    const Rational value = evaluate(tau.forms[d + j], x);
    if (!(value > c[j] - 1 && value <= c[j])) return false;
  }
  return true;
}

std::optional<RationalVector> combine_vertex_witnesses(const PartitionSpec& spec,
                                                       const RationalVector& c,
                                                       const std::vector<VertexWitness>& witnesses) {
  const std::size_t n = c.size();
  LpProblem lp;
  lp.variables = witnesses.size();
  lp.objective.assign(lp.variables, 0);
  for (std::size_t j = 0; j < n; ++j) {
    LpRow row;
    row.sense = RowSense::Equal;
    row.rhs = c[j];
    for (const VertexWitness& w : witnesses) row.coefficients.push_back(w.vertex.at(j));
    lp.rows.push_back(std::move(row));
  }
  LpRow sum;
  sum.sense = RowSense::Equal;
  sum.rhs = 1;
  sum.coefficients.assign(lp.variables, 1);
  lp.rows.push_back(std::move(sum));

  const LpSolution solution = solve_lp(lp);
  if (solution.status != LpStatus::Optimal) return std::nullopt;

  const std::size_t d = spec.vertex_count();
  RationalVector x(d, 0);
  for (std::size_t k = 0; k < witnesses.size(); ++k) {
    if (solution.x[k] == 0) continue;
    if (!is_conic_witness(spec, witnesses[k].vertex, witnesses[k].x)) {
      throw InvalidArgument("combine_vertex_witnesses: a vertex witness does not satisfy its condition");
    }
    for (std::size_t i = 0; i < d; ++i) x[i] += solution.x[k] * witnesses[k].x[i];
  }
  if (!is_conic_witness(spec, c, x)) {
    throw VerificationFailure("combine_vertex_witnesses: combined witness fails");
  }
  return x;
}

EquivalenceReport verify_equivalence(const PartitionSpec& spec, int margin) {
  if (margin < 0) throw InvalidArgument("verify_equivalence: margin must be nonnegative");
  const ConicRegion region = conic_region(spec);
  EquivalenceReport report;
  report.box = bounding_box(spec).inflated(margin);

  std::vector<Character> points;
  points.reserve(report.box.point_count());
  for_each_box_point(report.box, [&](const Character& z) { points.push_back(z); });
  report.points_checked = points.size();

  std::vector<char> feasible(points.size(), 0);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 16));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> failures(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t k = w; k < points.size(); k += workers) {
          feasible[k] = is_conic_feasible(spec, points[k]).feasible ? 1 : 0;
        }
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  for (std::size_t k = 0; k < points.size(); ++k) {
    const bool in_region = region.contains(points[k]);
    report.feasible_count += feasible[k];
    report.region_count += in_region ? 1 : 0;
    if (static_cast<bool>(feasible[k]) != in_region) {
      report.mismatches.push_back({points[k], static_cast<bool>(feasible[k]), in_region});
    }
  }
  return report;
}

}  // namespace edgering
