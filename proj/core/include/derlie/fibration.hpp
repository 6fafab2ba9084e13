#ifndef DERLIE_FIBRATION_HPP
#define DERLIE_FIBRATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "derlie/derivation.hpp"
#include "derlie/sullivan.hpp"

namespace derlie {

/// Shared computation context for one relative model: the base complex
/// Der(Lambda V), the fiber complex Der(Lambda W, Lambda V (x) Lambda W) and
/// the full complex, built once.
class FibrationAnalysis {
 public:
  explicit FibrationAnalysis(const RelativeModel& rm);

  const RelativeModel& relative() const { return *rm_; }
  const DerComplex& baseComplex() const { return base_; }
  const DerComplex& fiberComplex() const { return fiber_; }
  const DerComplex& fullComplex() const { return full_; }

  /// Zero-extension of a base derivation to the total algebra: fiber
  /// generators map to 0, base images embed as-is.
  Derivation zeroExtend(const Derivation& baseDer) const;

  /// The component map tau: fiber part of the total boundary applied to a
  /// (zero-extended) derivation.
  Derivation tau(const Derivation& totalDer) const;

  /// Split a total derivation into its base-generator and fiber-generator
  /// supported summands (images untouched).
  std::pair<Derivation, Derivation> split(const Derivation& totalDer) const;

 private:
  const RelativeModel* rm_;
  DerComplex base_;
  DerComplex fiber_;
  DerComplex full_;
};

/// tau per degree, as a matrix from the full elementary basis in degree n to
/// the fiber elementary basis in degree n-1.
struct TauMap {
  int degree = 0;
  RatMatrix matrix;
};

TauMap tauMatrix(const FibrationAnalysis& fa, int degree);

/// b_f(sigma) = proj_V o sigma, defined as a DGL map only for separable
/// models; throws Error(NotSeparable) otherwise.
Derivation bfProject(const FibrationAnalysis& fa, const Derivation& totalDer);

struct ProjectionCheck {
  bool separable = false;
  bool pass = false;
  // On failure of separability: the bracket violation triple of the
  // standard counterexample b_f([(w,1),(v,w)]) != [b_f(w,1), b_f(v,w)].
  std::optional<std::string> witnessFiberGen;  // w
  std::optional<std::string> witnessBaseGen;   // v
  std::vector<std::string> violations;         // chain/bracket mismatches (expected empty)
  std::size_t pairsChecked = 0;
};

/// Verifies on the elementary basis that b_f commutes with the boundaries and
/// preserves brackets. For non-separable models returns the concrete
/// violation instead.
ProjectionCheck strictProjectionCheck(const FibrationAnalysis& fa);

struct DeltaImage {
  int baseDegree = 0;          // n: degree of the input class
  Derivation tau;              // representative of delta([sigma]) in the fiber part
  RatVec coords;               // in the fiber basis of degree n-1
  bool zeroClass = true;
};

/// Connecting map delta_f([sigma]) = [tau] where partial_X(zero-extension of
/// sigma) = tau. sigma must be a partial_Y-cycle (Error(NotACycle) otherwise);
/// the model must be separable.
DeltaImage connectingDelta(const FibrationAnalysis& fa, const Derivation& baseCycle);

struct SectionVerdict {
  bool exists = false;
  int scanBound = 0;  // homology degrees scanned: 1..scanBound
  // first nonvanishing delta image, if any
  std::optional<int> failingDegree;
  std::optional<Derivation> failingBaseClass;
  std::optional<Derivation> failingDeltaImage;
  // degree-1 base classes are outside the positive-degree complex's reach and
  // are excluded from the test; they are counted here for the report.
  std::size_t excludedDegreeOneClasses = 0;
};

/// a_f admits a section iff delta_f vanishes on all of H_*(Der Lambda V).
SectionVerdict sectionExists(const FibrationAnalysis& fa);

enum class OddSphereOutcome { FibreTrivial, MapNullHomotopic };

struct OddSphereVerdict {
  OddSphereOutcome outcome = OddSphereOutcome::FibreTrivial;
  std::optional<std::string> witnessFiberGen;  // w with partial_X(v,1)(w) != 0
};

/// For a base Lambda(v) on a single odd generator: either the extension is
/// trivial (D W inside Lambda W) or a_f is null-homotopic. Throws
/// Error(BaseNotOddSphere) when the base has a different shape.
OddSphereVerdict oddSphereTriviality(const FibrationAnalysis& fa);

/// Homology of the fiber part: dim H_n = dim pi_{n+1}(Baut_1 f)_Q.
HomologySlice relDerHomology(const FibrationAnalysis& fa, int n);

struct PiOddVerdict {
  bool vanishes = false;
  int scanBound = 0;  // even degrees scanned up to here
  std::vector<std::pair<int, Derivation>> witnesses;  // nonzero even-degree classes
};

/// pi_odd(Baut_1 f)_Q = H_even(fiber part) vanishing test.
PiOddVerdict piOddVanishing(const FibrationAnalysis& fa);

/// Sum over i - j = n of dim Der_i(Lambda W) * dim H^j(Lambda V), the
/// underlying dimension of the fiber DGL model of a_f. Throws
/// Error(CutoffInsufficient) if base cohomology is not determined far enough.
std::size_t fiberDimsFormula(const FibrationAnalysis& fa, int n, int cohomologyCutoff);

/// Rank of delta_f: H_n(base) -> H_{n-1}(fiber part), for the long exact
/// sequence bookkeeping.
std::size_t deltaRank(const FibrationAnalysis& fa, int n);

/// The rho-image inside the fiber slice at the given shift: spanning vectors
/// of the derivations (w, m h) with m a fiber-only monomial and h a chosen
/// base cocycle representative. Its slice dimensions realize the fiber
/// dimension formula and its homology matches the fiber part.
std::vector<RatVec> rhoImageSpan(const FibrationAnalysis& fa, int shift, int cohomologyCutoff);

/// dim H_n of the rho-image subcomplex.
std::size_t rhoSubcomplexHomologyDim(const FibrationAnalysis& fa, int n, int cohomologyCutoff);

}  // namespace derlie

#endif
