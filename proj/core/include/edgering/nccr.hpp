#pragma once

#include "edgering/class_group.hpp"
#include "edgering/conic.hpp"
#include "edgering/errors.hpp"

#include <optional>
#include <string>
#include <vector>

namespace edgering {

/// beta_1..beta_m (vertex divisors first) in a fixed basis of Cl = Z^n.
struct BetaSystem {
  std::vector<IntVector> vectors;
  BasisConvention convention = BasisConvention::FundamentalFirst;

  std::size_t m() const { return vectors.size(); }
  std::size_t n() const { return vectors.empty() ? 0 : vectors.front().size(); }
};

BetaSystem beta_system(const PartitionSpec& spec, BasisConvention convention);

enum class CharacterSetLabel { L, LTilde };

/// Sorted set of characters without duplicates.
class CharacterSet {
 public:
  CharacterSet() = default;
  /// Throws InvalidArgument on duplicates or mixed dimensions.
  CharacterSet(std::vector<Character> members, CharacterSetLabel label);

  const std::vector<Character>& members() const { return members_; }
  CharacterSetLabel label() const { return label_; }
  std::size_t size() const { return members_.size(); }
  std::size_t dimension() const { return members_.empty() ? 0 : members_.front().size(); }
  bool contains(const Character& chi) const;
  /// Returns false if chi was already present.
  bool insert(const Character& chi);
  bool same_members(const CharacterSet& other) const { return members_ == other.members_; }

 private:
  std::vector<Character> members_;
  CharacterSetLabel label_ = CharacterSetLabel::L;
};

/// <lambda, chi> < <lambda, chi'> for every chi' in L.
bool is_separated(const Character& chi, const CharacterSet& L, const IntVector& lambda);

struct StepCheckResult {
  bool passed = false;
  /// Zero-based i with <beta_i, lambda> > 0.
  std::vector<std::size_t> positive_indices;
  std::size_t subsets_checked = 0;
  /// Distinct characters chi + sum_S beta over nonempty S, sorted.
  std::vector<Character> shifts;
  std::optional<Character> missing_shift;
};

/// Every nonempty index subset S of the positive indices must give
/// chi + sum_{i in S} beta_i in L. Throws EnumerationLimit above 24 positive
/// indices.
StepCheckResult step_check(const Character& chi, const IntVector& lambda, const CharacterSet& L,
                           const BetaSystem& beta);

/// Which set lambda has to separate chi from. The resolution argument needs
/// separation from the fixed set defining the endomorphism ring (Initial);
/// Current checks against the growing set instead, which is stronger.
enum class SeparationReference { Initial, Current };

std::string to_string(SeparationReference reference);

struct ScheduleEntry {
  Character chi;
  IntVector lambda;
};

struct CertificateStep {
  Character chi;
  IntVector lambda;
  std::vector<std::size_t> positive_indices;
  std::size_t verified_shift_count = 0;
  std::vector<Character> shifts;
};

struct NCCRCertificate {
  std::vector<CertificateStep> steps;
  CharacterSet initial_L;
  CharacterSet final_L;
  CharacterSet target;
  BetaSystem beta;
  std::vector<std::string> assumptions;
  SeparationReference separation = SeparationReference::Initial;
  bool complete = false;
};

/// A schedule step that could not be verified.
class ScheduleError : public VerificationFailure {
 public:
  ScheduleError(std::size_t step, Character chi, IntVector lambda, std::string reason);

  std::size_t step() const { return step_; }
  const Character& chi() const { return chi_; }
  const IntVector& lambda() const { return lambda_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t step_;
  Character chi_;
  IntVector lambda_;
  std::string reason_;
};

/// Runs the steps in order. Shifts must lie in the growing L; separation is
/// checked against the set named by `separation`. Throws ScheduleError on the
/// first step that is out of place, not separated, or fails step_check.
/// `complete` reports whether the final L equals L_tilde.
NCCRCertificate run_schedule(const CharacterSet& L0, const CharacterSet& L_tilde, const BetaSystem& beta,
                             const std::vector<ScheduleEntry>& schedule,
                             std::vector<std::string> assumptions = {},
                             SeparationReference separation = SeparationReference::Initial);

/// First nonzero lambda with max norm <= bound that separates chi from
/// `separate_from` and passes step_check against L. Norms are scanned upward,
/// each shell lexicographically. Throws InvalidArgument if bound < 1.
std::optional<IntVector> search_lambda(const Character& chi, const CharacterSet& separate_from,
                                       const CharacterSet& L, const BetaSystem& beta, int bound);
/// Same, separating from L itself.
std::optional<IntVector> search_lambda(const Character& chi, const CharacterSet& L, const BetaSystem& beta,
                                       int bound);

/// Exact decision without a norm bound: tries every set P of indices whose
/// subset shifts all stay in L and solves for a real lambda with exactly P
/// positive that separates chi from `separate_from`. Returns an integral
/// lambda, or nullopt when none exists. Throws EnumerationLimit above 20
/// divisors.
std::optional<IntVector> decide_lambda(const Character& chi, const CharacterSet& separate_from,
                                       const CharacterSet& L, const BetaSystem& beta);

/// Grows L0 to L_tilde using search_lambda in place of a schedule. At each
/// stage the smallest viable chi is tried first, with backtracking when a
/// branch gets stuck. Returns nullopt if no order works.
std::optional<NCCRCertificate> run_auto_search(const CharacterSet& L0, const CharacterSet& L_tilde,
                                               const BetaSystem& beta, int bound,
                                               std::vector<std::string> assumptions = {},
                                               SeparationReference separation = SeparationReference::Initial);

/// Under Initial separation a larger L only helps step_check, so adding every
/// character for which decide_lambda succeeds, until nothing changes, reaches
/// the largest attainable set. The certificate records one valid order;
/// `complete` is false when some characters can never be added.
NCCRCertificate run_exact_closure(const CharacterSet& L0, const CharacterSet& L_tilde, const BetaSystem& beta,
                                  std::vector<std::string> assumptions = {});

/// chi - chi' in L_tilde for all chi, chi' in L.
bool check_difference_closure(const CharacterSet& L, const CharacterSet& L_tilde);

/// Re-runs is_separated and step_check for every step against the
/// intermediate L it was recorded with.
bool replay_certificate(const NCCRCertificate& certificate);

}  // namespace edgering
