#ifndef DERLIE_DERIVATION_HPP
#define DERLIE_DERIVATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "derlie/ratmat.hpp"
#include "derlie/sullivan.hpp"

namespace derlie {

/// Degree-lowering derivation of a model, stored by its generator images.
/// shift is the amount of degree lowered; intermediate results of the
/// boundary may carry shift 0 even though the chain complex lives in
/// shifts >= 1.
struct Derivation {
  int shift = 0;
  std::vector<AlgElement> images;  // one per generator of the model

  bool isZero() const;
  bool operator==(const Derivation&) const = default;
};

Derivation zeroDerivation(const SullivanModel& m, int shift);
Derivation operator+(const Derivation& a, const Derivation& b);
Derivation operator-(const Derivation& a, const Derivation& b);
Derivation operator*(const Rat& c, const Derivation& a);

/// Elementary derivation (v, m): generator index plus a monomial image.
struct ElemDer {
  std::size_t gen = 0;
  Monomial mono;

  bool operator==(const ElemDer&) const = default;
};

std::string toString(const SullivanModel& m, const ElemDer& e);
std::string toString(const SullivanModel& m, const Derivation& d);

Derivation elementary(const SullivanModel& m, const ElemDer& e, Rat coeff = Rat(1));
Derivation elementary(const SullivanModel& m, const std::string& gen, const AlgElement& image);

/// sigma evaluated on an element via the Leibniz rule
/// sigma(xy) = sigma(x) y + (-1)^{shift |x|} x sigma(y).
AlgElement applyDerivation(const SullivanModel& m, const Derivation& sigma, const AlgElement& x);

/// boundary(sigma) = d o sigma - (-1)^{shift} sigma o d, one shift lower.
Derivation derBoundary(const SullivanModel& m, const Derivation& sigma);

/// [sigma, tau] = sigma o tau - (-1)^{|sigma||tau|} tau o sigma.
Derivation derBracket(const SullivanModel& m, const Derivation& sigma, const Derivation& tau);

/// All elementary derivations (v, m) with |v| - |m| = shift, ordered by
/// generator then monomial. The full table, including shift-1 entries whose
/// boundary has a shift-0 component; the chain complex applies the cycle
/// restriction separately.
std::vector<ElemDer> derivationBasis(const SullivanModel& m, int shift);

/// Basis and boundary matrix of one degree of the derivation complex.
struct ChainSlice {
  int degree = 0;
  std::vector<ElemDer> basis;
  RatMatrix boundary;  // columns: basis elements; rows: basis of degree-1
};

struct HomologySlice {
  int degree = 0;
  std::size_t dim = 0;
  std::vector<RatVec> reps;  // cycle coordinates in the slice basis
};

/// A homology class with enough context for zero and equality tests: the
/// representative is a cycle, comparisons run through the owning complex's
/// boundary space.
struct HomologyClass {
  int degree = 0;
  Derivation representative;
  RatVec coords;  // in the degree slice's elementary basis
};

/// Which sub-DGL of Der(total) a complex is built over.
enum class DerPart {
  Full,   // all generators
  Fiber,  // Der(Lambda W, Lambda V (x) Lambda W): derivations out of fiber gens
};

/// The chain complex Der M = (+)_{i>0} Der_i M with boundary matrices per
/// degree. Degree 1 chains are the partial-cycles inside Der_1 (the boundary
/// into shift 0 must vanish); all computations and class comparisons run in
/// the elementary-basis coordinates of each degree. Construction is eager up
/// to max generator degree; instances are immutable afterwards and safe to
/// share across threads.
class DerComplex {
 public:
  explicit DerComplex(const SullivanModel& m, DerPart part = DerPart::Full,
                      std::size_t baseCount = 0);

  const SullivanModel& model() const { return *model_; }
  int maxDegree() const { return maxDegree_; }

  const ChainSlice& slice(int n) const;                    // n >= 1
  const std::vector<ElemDer>& basis(int n) const;          // n >= 0
  const RatMatrix& boundaryMatrix(int n) const;            // C_n -> basis(n-1), n >= 1

  /// Cycle space of degree n (kernel of the boundary; in degree 1 this is the
  /// whole chain group by the cycle convention).
  std::vector<RatVec> cycleBasis(int n) const;

  /// Images of the degree-(n+1) elementary basis, i.e. spanning vectors of
  /// the boundary space inside degree n.
  std::vector<RatVec> boundarySpan(int n) const;

  HomologySlice homology(int n) const;
  std::vector<HomologyClass> homologyClasses(int n) const;

  /// All homology in one pass, degrees 1..maxDegree.
  std::vector<HomologySlice> allHomology() const;

  Derivation toDerivation(int n, const RatVec& coords) const;

  /// Expand a derivation of shift n in the degree-n slice basis. For the
  /// fiber part the derivation must vanish on base generators.
  std::optional<RatVec> coordinates(int n, const Derivation& d) const;

  bool isBoundary(int n, const RatVec& coords) const;

  /// Class comparison [a] == [b] (difference lies in the boundary space).
  bool sameClass(int n, const RatVec& a, const RatVec& b) const;

 private:
  bool keepGen(std::size_t genIdx) const;

  const SullivanModel* model_;
  DerPart part_;
  std::size_t baseCount_;
  int maxDegree_;
  std::vector<ChainSlice> slices_;  // index n = 0..maxDegree; degree 0 has no boundary
};

/// dim H_{n-1}(Der M) = dim pi_n(Baut_1 X)_Q for n in [lo, hi], lo >= 2.
std::map<int, std::size_t> piAutDims(const SullivanModel& m, int lo, int hi);

}  // namespace derlie

#endif
