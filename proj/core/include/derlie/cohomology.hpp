#ifndef DERLIE_COHOMOLOGY_HPP
#define DERLIE_COHOMOLOGY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "derlie/ratmat.hpp"
#include "derlie/sullivan.hpp"

namespace derlie {

struct CohomologyTable {
  int cutoff = 0;
  std::vector<std::size_t> dims;                // index = degree, 0..cutoff
  std::vector<std::vector<AlgElement>> reps;    // cocycle representatives per degree
  std::optional<int> certifiedZeroBeyond;       // set when a socle bound certifies vanishing

  std::size_t dim(int degree) const {
    if (degree < 0 || static_cast<std::size_t>(degree) >= dims.size())
      return 0;  // past the cutoff this is only meaningful with certifiedZeroBeyond
    return dims[static_cast<std::size_t>(degree)];
  }
};

/// H^*(Lambda V, d) degree by degree, exact kernels over images.
CohomologyTable cdgaCohomology(const SullivanModel& m, int cutoff);

/// Quotient Q[x_1..x_n]/(f_1..f_n) handled degreewise by linear algebra.
/// No Groebner machinery: relations are homogeneous and instances desk-scale.
class FiniteGradedRing {
 public:
  FiniteGradedRing(std::vector<Generator> evenGens, std::vector<AlgElement> relations);

  const GradedAlgebra& ambient() const { return poly_; }
  const std::vector<AlgElement>& relations() const { return relations_; }

  /// Complete-intersection top degree sum(|f_i| - |x_i|).
  int socleBound() const;

  /// Degreewise finiteness evidence: every degree in (socle, 2*socle] is zero.
  bool finitenessEvidence() const;

  std::size_t quotientDim(int degree) const;

  /// Monomials representing a basis of the quotient in this degree
  /// (non-pivot monomials of the ideal span, deterministic).
  std::vector<Monomial> quotientBasis(int degree) const;

  /// Canonical representative modulo the ideal: pivot coordinates eliminated.
  AlgElement reduce(const AlgElement& e) const;

 private:
  struct DegreeData {
    std::vector<Monomial> monomials;
    RrefResult idealRref;              // rows span the ideal's degree slice
    std::vector<std::size_t> freeCols;
  };
  const DegreeData& degreeData(int degree) const;

  GradedAlgebra poly_;
  std::vector<AlgElement> relations_;
  mutable std::map<int, DegreeData> cache_;
};

struct NegDerivation {
  int k = 0;                                // lowers degree by k
  std::vector<AlgElement> genImages;        // theta(x_i), reduced mod ideal
};

struct NegDerivationResult {
  std::size_t dim = 0;
  std::vector<NegDerivation> witnesses;
};

/// Degree-(-k) derivations theta of the quotient ring: theta(x_i) in
/// H^{|x_i|-k} subject to theta(f_j) = 0 mod ideal.
NegDerivationResult negDerivationsOfRing(const FiniteGradedRing& r, int k);

struct F0Verdict {
  bool isF0 = false;
  bool pure = false;
  bool countsMatch = false;
  bool oddCohomologyVanishes = false;
  bool finitenessEvidence = false;
  int socleBound = 0;
  CohomologyTable cohomology;
  std::string detail;
};

/// F0 certificate for a pure model: equal generator counts, H^odd = 0 and
/// vanishing past the socle bound (bounded-degree evidence, not a proof of
/// global finiteness). Throws Error(NotPure) when the model is not pure.
F0Verdict f0Certify(const SullivanModel& m);

struct HalperinVerdict {
  bool holds = false;
  int maxKScanned = 0;
  std::optional<NegDerivation> witness;  // a nonzero negative derivation
  std::string note;
};

/// Meier's form of the Halperin test: no nonzero negative-degree derivations
/// of H^* = Q[x]/(f). Throws Error(NotF0) when the certificate fails or the
/// model is not of the required shape.
HalperinVerdict halperinTest(const SullivanModel& m);
HalperinVerdict halperinTest(const FiniteGradedRing& ring);

/// Build the F0 presentation ring of a certified model (relations dy_j).
FiniteGradedRing f0Ring(const SullivanModel& m);

struct BorelResult {
  RelativeModel extension;   // base Q[t_1..t_r] (degree 2), fiber = model gens
  CohomologyTable cohomology;
  bool tailVanishes = false;  // H = 0 on the trailing window below the cutoff
  int tailWindow = 0;
};

/// KS extension (Q[t_1..t_r], 0) -> (Q[t] (x) Lambda V, D) with D(t_i) = 0
/// and D(v) = d(v) modulo (t_1..t_r). images maps each generator of m to its
/// D-image inside the extended algebra (t generators first). Validation
/// failures throw Error(NotAKSExtension) naming the violated condition.
BorelResult borelExtend(const SullivanModel& m, int rank,
                        const std::map<std::string, AlgElement>& images, int cutoff);

}  // namespace derlie

#endif
