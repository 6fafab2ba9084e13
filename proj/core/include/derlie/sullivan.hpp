#ifndef DERLIE_SULLIVAN_HPP
#define DERLIE_SULLIVAN_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "derlie/graded_algebra.hpp"

namespace derlie {

struct ValidationIssue {
  std::string generator;
  std::string kind;  // "degree", "d-squared", "minimality"
  std::string detail;
};

struct ValidationReport {
  bool pass = true;      // degree and d^2 checks
  bool minimal = true;   // d(V) in Lambda^{>=2}, recorded but not required
  std::vector<ValidationIssue> issues;
};

/// Classification per the standard trichotomy: pure means the differential
/// vanishes on even generators (odd images are automatically of even degree);
/// F0 candidacy additionally needs equally many even and odd generators.
/// Candidacy is confirmed only by the cohomology-side certificate.
struct Classification {
  bool pure = false;
  bool ellipticCandidate = true;  // finitely many generators, by construction
  bool f0Candidate = false;
  std::size_t evenGens = 0;
  std::size_t oddGens = 0;
};

/// Free CDGA (Lambda V, d) with validated degrees. Immutable after
/// construction; all queries are const and thread-safe.
class SullivanModel {
 public:
  /// diff[i] is the image of generator i (zero element when absent).
  SullivanModel(std::string name, std::vector<Generator> gens, std::vector<AlgElement> diff);

  const std::string& name() const { return name_; }
  const GradedAlgebra& algebra() const { return alg_; }
  std::size_t genCount() const { return alg_.genCount(); }
  const AlgElement& diffOf(std::size_t gen) const { return diff_[gen]; }
  std::span<const AlgElement> diff() const { return diff_; }

  /// d on an arbitrary element (degree +1 derivation, shift -1).
  AlgElement d(const AlgElement& e) const;

  ValidationReport validate() const;
  Classification classify() const;

 private:
  std::string name_;
  GradedAlgebra alg_;
  std::vector<AlgElement> diff_;
};

struct SeparabilityVerdict {
  bool separable = false;
  std::optional<int> minFiber;  // nullopt when W is empty (min = infinity)
  int maxBase = 0;              // 0 when V is empty
  // witness pair (w, v) with |w| < |v| when not separable
  std::optional<std::pair<std::string, std::string>> witness;
};

/// KS extension (Lambda V, d) -> (Lambda V (x) Lambda W, D). The total model
/// owns the single copy of D; the base model is a derived view over the first
/// baseCount generators, materialized on demand.
class RelativeModel {
 public:
  /// total's generators are base generators first, fiber generators after.
  /// baseName labels the materialized base view (defaults to "<name>.base").
  RelativeModel(std::string name, SullivanModel total, std::size_t baseCount,
                std::string baseName = "");

  const std::string& name() const { return name_; }
  const SullivanModel& total() const { return total_; }
  const SullivanModel& base() const;
  std::size_t baseCount() const { return baseCount_; }
  std::size_t fiberCount() const { return total_.genCount() - baseCount_; }
  bool isFiberGen(std::size_t idx) const { return idx >= baseCount_; }

  /// Base-algebra element embedded in the total algebra (same exponents,
  /// zero on fiber generators).
  AlgElement embedBase(const AlgElement& e) const;

  /// proj_V: kill every term containing a fiber generator.
  AlgElement projV(const AlgElement& e) const { return total_.algebra().projectToFirst(e, baseCount_); }

  /// Total-algebra element with no fiber support, re-expressed over the base
  /// algebra. Throws when some term touches a fiber generator.
  AlgElement restrictToBase(const AlgElement& e) const;

  SeparabilityVerdict separability() const;

 private:
  std::string name_;
  std::string baseName_;
  SullivanModel total_;
  std::size_t baseCount_;
  mutable std::shared_ptr<const SullivanModel> baseCache_;
};

/// min |w| >= max |v| test with the empty-set conventions min(empty) =
/// infinity, max(empty) = 0.
SeparabilityVerdict isPiQSeparable(const RelativeModel& rm);

}  // namespace derlie

#endif
