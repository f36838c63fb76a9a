#include "edgering/nccr.hpp"

#include "edgering/linear_feasibility.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace edgering {
namespace {

constexpr std::size_t kMaxPositiveIndices = 24;
constexpr std::size_t kMaxDecideDivisors = 20;

Integer pairing(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("pairing: dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

std::string character_text(const Character& chi) {
  std::string s = "(";
  for (std::size_t i = 0; i < chi.size(); ++i) {
    if (i) s += ",";
    s += to_string(chi[i]);
  }
  return s + ")";
}

// Shells of ||lambda||_inf == k, lexicographic over [-k, k]^n.
template <typename Visit>
bool for_each_in_shell(std::size_t n, int k, Visit&& visit) {
  IntVector lambda(n, Integer(-k));
  while (true) {
    bool on_shell = false;
    for (const Integer& x : lambda) {
      if (abs(x) == k) on_shell = true;
    }
    if (on_shell && visit(static_cast<const IntVector&>(lambda))) return true;
    std::size_t i = n;
    while (true) {
      if (i == 0) return false;
      --i;
      if (lambda[i] < k) {
        ++lambda[i];
        break;
      }
      lambda[i] = -k;
    }
  }
}

CertificateStep make_step(const Character& chi, const IntVector& lambda, const StepCheckResult& check) {
  return {chi, lambda, check.positive_indices, check.shifts.size(), check.shifts};
}

}  // namespace

std::string to_string(SeparationReference reference) {
  return reference == SeparationReference::Initial ? "initial" : "current";
}

BetaSystem beta_system(const PartitionSpec& spec, BasisConvention convention) {
  const ClassGroupStructure group = class_group(spec, convention);
  if (!divisor_relations_hold(spec, group.divisor_images)) {
    throw ContractViolation("beta_system: divisor relations fail");
  }
  return {group.divisor_images, convention};
}

CharacterSet::CharacterSet(std::vector<Character> members, CharacterSetLabel label)
    : members_(std::move(members)), label_(label) {
  for (const Character& chi : members_) {
    if (chi.size() != members_.front().size()) {
      throw InvalidArgument("CharacterSet: characters of different dimensions");
    }
  }
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw InvalidArgument("CharacterSet: duplicate character");
  }
}

bool CharacterSet::contains(const Character& chi) const {
  return std::binary_search(members_.begin(), members_.end(), chi);
}

bool CharacterSet::insert(const Character& chi) {
  if (!members_.empty() && chi.size() != members_.front().size()) {
    throw InvalidArgument("CharacterSet::insert: dimension mismatch");
  }
  auto it = std::lower_bound(members_.begin(), members_.end(), chi);
  if (it != members_.end() && *it == chi) return false;
  members_.insert(it, chi);
  return true;
}

bool is_separated(const Character& chi, const CharacterSet& L, const IntVector& lambda) {
  if (is_zero(lambda)) throw InvalidArgument("is_separated: lambda must be nonzero");
  const Integer value = pairing(lambda, chi);
  return std::all_of(L.members().begin(), L.members().end(),
                     [&](const Character& other) { return value < pairing(lambda, other); });
}

StepCheckResult step_check(const Character& chi, const IntVector& lambda, const CharacterSet& L,
                           const BetaSystem& beta) {
  StepCheckResult result;
  for (std::size_t i = 0; i < beta.m(); ++i) {
    if (pairing(beta.vectors[i], lambda) > 0) result.positive_indices.push_back(i);
  }
  const std::size_t p = result.positive_indices.size();
  if (p > kMaxPositiveIndices) {
    throw EnumerationLimit("step_check: too many positive indices (" + std::to_string(p) + ")");
  }
  std::set<Character> shifts;
  result.passed = true;
  const std::uint64_t end = std::uint64_t{1} << p;
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    Character shifted = chi;
    for (std::size_t k = 0; k < p; ++k) {
      if (!(mask >> k & 1u)) continue;
      const IntVector& b = beta.vectors[result.positive_indices[k]];
      for (std::size_t c = 0; c < shifted.size(); ++c) shifted[c] += b[c];
    }
    ++result.subsets_checked;
    if (!L.contains(shifted)) {
      result.passed = false;
      result.missing_shift = shifted;
      break;
    }
    shifts.insert(std::move(shifted));
  }
  result.shifts.assign(shifts.begin(), shifts.end());
  return result;
}

ScheduleError::ScheduleError(std::size_t step, Character chi, IntVector lambda, std::string reason)
    : VerificationFailure("schedule step " + std::to_string(step + 1) + " chi=" + character_text(chi) +
                          " lambda=" + character_text(lambda) + ": " + reason),
      step_(step),
      chi_(std::move(chi)),
      lambda_(std::move(lambda)),
      reason_(std::move(reason)) {}

NCCRCertificate run_schedule(const CharacterSet& L0, const CharacterSet& L_tilde, const BetaSystem& beta,
                             const std::vector<ScheduleEntry>& schedule, std::vector<std::string> assumptions,
                             SeparationReference separation) {
  NCCRCertificate certificate;
  certificate.initial_L = L0;
  certificate.final_L = L0;
  certificate.target = L_tilde;
  certificate.beta = beta;
  certificate.assumptions = std::move(assumptions);
  certificate.separation = separation;

  for (std::size_t step = 0; step < schedule.size(); ++step) {
    const ScheduleEntry& entry = schedule[step];
    if (is_zero(entry.lambda)) throw ScheduleError(step, entry.chi, entry.lambda, "lambda is zero");
    if (!L_tilde.contains(entry.chi)) throw ScheduleError(step, entry.chi, entry.lambda, "chi is not in L_tilde");
    if (certificate.final_L.contains(entry.chi)) {
      throw ScheduleError(step, entry.chi, entry.lambda, "chi is already in L");
    }
    const CharacterSet& reference = separation == SeparationReference::Initial ? L0 : certificate.final_L;
    if (!is_separated(entry.chi, reference, entry.lambda)) {
      throw ScheduleError(step, entry.chi, entry.lambda,
                          "chi is not separated from the " + to_string(separation) + " set by lambda");
    }
    const StepCheckResult check = step_check(entry.chi, entry.lambda, certificate.final_L, beta);
    if (!check.passed) {
      throw ScheduleError(step, entry.chi, entry.lambda,
                          "shift " + character_text(*check.missing_shift) + " is not in L");
    }
    certificate.steps.push_back(make_step(entry.chi, entry.lambda, check));
    certificate.final_L.insert(entry.chi);
  }
  certificate.complete = certificate.final_L.same_members(L_tilde);
  return certificate;
}

std::optional<IntVector> search_lambda(const Character& chi, const CharacterSet& L, const BetaSystem& beta,
                                       int bound) {
  return search_lambda(chi, L, L, beta, bound);
}

std::optional<IntVector> search_lambda(const Character& chi, const CharacterSet& separate_from,
                                       const CharacterSet& L, const BetaSystem& beta, int bound) {
  if (bound < 1) throw InvalidArgument("search_lambda: bound must be at least 1");
  std::optional<IntVector> found;
  for (int k = 1; k <= bound && !found; ++k) {
    for_each_in_shell(chi.size(), k, [&](const IntVector& lambda) {
      if (is_separated(chi, separate_from, lambda) && step_check(chi, lambda, L, beta).passed) {
        found = lambda;
        return true;
      }
      return false;
    });
  }
  return found;
}

std::optional<IntVector> decide_lambda(const Character& chi, const CharacterSet& separate_from,
                                       const CharacterSet& L, const BetaSystem& beta) {
  const std::size_t m = beta.m();
  const std::size_t n = chi.size();
  if (m > kMaxDecideDivisors) throw EnumerationLimit("decide_lambda: too many divisors");
  auto shift_in_L = [&](std::uint64_t subset) {
    Character shifted = chi;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(subset >> i & 1u)) continue;
      for (std::size_t c = 0; c < n; ++c) shifted[c] += beta.vectors[i][c];
    }
    return L.contains(shifted);
  };
  const std::uint64_t end = std::uint64_t{1} << m;
  for (std::uint64_t positive = 0; positive < end; ++positive) {
    bool admissible = true;
    for (std::uint64_t subset = positive; subset != 0 && admissible; subset = (subset - 1) & positive) {
      admissible = shift_in_L(subset);
    }
    if (!admissible) continue;

    // Separation and sign conditions are homogeneous, so a box loses nothing.
    StrictLinearSystem system(n);
    for (std::size_t c = 0; c < n; ++c) {
      RationalVector unit(n, 0);
      unit[c] = 1;
      system.add(unit, Relation::LessEqual, 1);
      system.add_lower(unit, Relation::LessEqual, -1);
    }
    for (std::size_t i = 0; i < m; ++i) {
      const RationalVector b(beta.vectors[i].begin(), beta.vectors[i].end());
      if (positive >> i & 1u) system.add_lower(b, Relation::Less, 0);
      else system.add(b, Relation::LessEqual, 0);
    }
    for (const Character& other : separate_from.members()) {
      RationalVector diff(n);
      for (std::size_t c = 0; c < n; ++c) diff[c] = Rational(other[c] - chi[c]);
      system.add_lower(diff, Relation::Less, 0);
    }
    const auto witness = feasible_with_strict(system);
    if (!witness) continue;

    Integer scale = 1;
    for (const Rational& x : *witness) {
      const Integer den = denominator(x);
      scale = scale / gcd(scale, den) * den;
    }
    IntVector lambda(n);
    for (std::size_t c = 0; c < n; ++c) lambda[c] = numerator(Rational((*witness)[c] * scale));
    Integer common = 0;
    for (const Integer& x : lambda) common = gcd(common, x);
    if (common > 1) {
      for (Integer& x : lambda) x /= common;
    }
    if (is_zero(lambda) || !is_separated(chi, separate_from, lambda) || !step_check(chi, lambda, L, beta).passed) {
      throw ContractViolation("decide_lambda: scaled witness fails the step conditions");
    }
    return lambda;
  }
  return std::nullopt;
}

std::optional<NCCRCertificate> run_auto_search(const CharacterSet& L0, const CharacterSet& L_tilde,
                                               const BetaSystem& beta, int bound,
                                               std::vector<std::string> assumptions,
                                               SeparationReference separation) {
  if (bound < 1) throw InvalidArgument("run_auto_search: bound must be at least 1");
  for (const Character& chi : L0.members()) {
    if (!L_tilde.contains(chi)) throw InvalidArgument("run_auto_search: L0 is not inside L_tilde");
  }
  std::vector<Character> candidates;
  for (const Character& chi : L_tilde.members()) {
    if (!L0.contains(chi)) candidates.push_back(chi);
  }
  if (candidates.size() > 63) throw EnumerationLimit("run_auto_search: too many characters to add");

  std::set<std::uint64_t> dead;
  std::vector<ScheduleEntry> chosen;
  CharacterSet current = L0;
  auto explore = [&](auto&& self, std::uint64_t added) -> bool {
    if (chosen.size() == candidates.size()) return true;
    if (dead.count(added)) return false;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (added >> k & 1u) continue;
      const CharacterSet& reference = separation == SeparationReference::Initial ? L0 : current;
      auto lambda = search_lambda(candidates[k], reference, current, beta, bound);
      if (!lambda) continue;
      chosen.push_back({candidates[k], *lambda});
      CharacterSet saved = current;
      current.insert(candidates[k]);
      if (self(self, added | std::uint64_t{1} << k)) return true;
      current = std::move(saved);
      chosen.pop_back();
    }
    dead.insert(added);
    return false;
  };
  if (!explore(explore, 0)) return std::nullopt;
  return run_schedule(L0, L_tilde, beta, chosen, std::move(assumptions), separation);
}

NCCRCertificate run_exact_closure(const CharacterSet& L0, const CharacterSet& L_tilde, const BetaSystem& beta,
                                  std::vector<std::string> assumptions) {
  std::vector<ScheduleEntry> order;
  CharacterSet current = L0;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Character& chi : L_tilde.members()) {
      if (current.contains(chi)) continue;
      if (auto lambda = decide_lambda(chi, L0, current, beta)) {
        order.push_back({chi, *lambda});
        current.insert(chi);
        grew = true;
      }
    }
  }
  return run_schedule(L0, L_tilde, beta, order, std::move(assumptions), SeparationReference::Initial);
}

bool check_difference_closure(const CharacterSet& L, const CharacterSet& L_tilde) {
  for (const Character& a : L.members()) {
    for (const Character& b : L.members()) {
      Character diff(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
      if (!L_tilde.contains(diff)) return false;
    }
  }
  return true;
}

bool replay_certificate(const NCCRCertificate& certificate) {
  CharacterSet current = certificate.initial_L;
  for (const CertificateStep& step : certificate.steps) {
    if (current.contains(step.chi)) return false;
    const CharacterSet& reference =
        certificate.separation == SeparationReference::Initial ? certificate.initial_L : current;
    if (!is_separated(step.chi, reference, step.lambda)) return false;
    const StepCheckResult check = step_check(step.chi, step.lambda, current, certificate.beta);
    if (!check.passed || check.positive_indices != step.positive_indices || check.shifts != step.shifts) {
      return false;
    }
    current.insert(step.chi);
  }
  return current.same_members(certificate.final_L);
}

}  // namespace edgering
