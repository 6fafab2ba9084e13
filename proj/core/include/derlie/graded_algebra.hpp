#ifndef DERLIE_GRADED_ALGEBRA_HPP
#define DERLIE_GRADED_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "derlie/rational.hpp"

namespace derlie {

/// A graded generator. Parity is determined by the degree: odd degree means
/// exterior (square zero), even degree means polynomial.
struct Generator {
  std::string name;
  int degree = 0;

  bool odd() const { return degree % 2 != 0; }
  bool operator==(const Generator&) const = default;
};

/// Exponent vector over the algebra's generators, declaration order. Odd
/// generators carry exponent 0 or 1. Monomials compare lexicographically,
/// which fixes every basis ordering in the library.
using Monomial = std::vector<std::uint32_t>;

/// Element of a free graded-commutative algebra: finitely many monomials with
/// nonzero rational coefficients. Plain data; products and derivations need
/// the owning GradedAlgebra for degrees and signs.
struct AlgElement {
  std::map<Monomial, Rat> terms;

  bool isZero() const { return terms.empty(); }
  bool operator==(const AlgElement&) const = default;
};

AlgElement operator+(const AlgElement& a, const AlgElement& b);
AlgElement operator-(const AlgElement& a, const AlgElement& b);
AlgElement operator*(const Rat& c, const AlgElement& a);
AlgElement& operator+=(AlgElement& a, const AlgElement& b);

/// Free graded-commutative algebra Lambda(V) over Q. All member functions are
/// pure and the object is immutable after construction, so concurrent reads
/// are safe.
class GradedAlgebra {
 public:
  explicit GradedAlgebra(std::vector<Generator> gens);

  std::size_t genCount() const { return gens_.size(); }
  const Generator& gen(std::size_t i) const { return gens_[i]; }
  std::span<const Generator> gens() const { return gens_; }
  std::optional<std::size_t> genIndex(const std::string& name) const;

  int maxGenDegree() const { return maxDegree_; }

  Monomial unitMonomial() const { return Monomial(gens_.size(), 0); }
  AlgElement one() const;
  AlgElement genElement(std::size_t i) const;
  AlgElement monomialElement(const Monomial& m, Rat coeff = Rat(1)) const;

  int degreeOf(const Monomial& m) const;

  /// Degree when every term agrees; nullopt for inhomogeneous elements.
  /// The zero element is homogeneous of every degree (returns nullopt too,
  /// use isHomogeneousOfDegree for the permissive test).
  std::optional<int> homogeneousDegree(const AlgElement& e) const;
  bool isHomogeneousOfDegree(const AlgElement& e, int degree) const;

  /// Complete canonically ordered monomial basis of the given degree.
  /// Degree 0 yields {1}; impossible degrees yield the empty list.
  std::vector<Monomial> monomialBasis(int degree) const;

  /// Product of two monomials with the Koszul sign, or nullopt when an odd
  /// generator squares to zero.
  std::optional<std::pair<Monomial, int>> mulMonomial(const Monomial& a, const Monomial& b) const;

  AlgElement mul(const AlgElement& a, const AlgElement& b) const;

  /// Extend generator images to the unique degree-shifting derivation and
  /// evaluate on target. `shift` is the amount the map LOWERS degree: a
  /// differential is shift -1, an element of Der_i is shift +i. Sign rule on
  /// products: sigma(xy) = sigma(x) y + (-1)^{shift |x|} x sigma(y).
  /// Throws Error(InhomogeneousImage) when some nonzero image is not
  /// homogeneous of degree |gen| - shift.
  AlgElement leibnizApply(std::span<const AlgElement> images, int shift,
                          const AlgElement& target) const;

  /// Keep only terms supported on the first `keepCount` generators
  /// (exponent zero on all later ones); the rest are dropped.
  AlgElement projectToFirst(const AlgElement& e, std::size_t keepCount) const;

  std::string toString(const Monomial& m) const;
  std::string toString(const AlgElement& e) const;

 private:
  void enumerateBasis(int remaining, std::size_t fromGen, Monomial& current,
                      std::vector<Monomial>& out) const;

  std::vector<Generator> gens_;
  std::map<std::string, std::size_t> index_;
  int maxDegree_ = 0;
};

}  // namespace derlie

#endif
