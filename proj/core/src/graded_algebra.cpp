#include "derlie/graded_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "derlie/error.hpp"

namespace derlie {

AlgElement operator+(const AlgElement& a, const AlgElement& b) {
  AlgElement out = a;
  out += b;
  return out;
}

AlgElement& operator+=(AlgElement& a, const AlgElement& b) {
  for (const auto& [mono, coeff] : b.terms) {
    auto it = a.terms.find(mono);
    if (it == a.terms.end()) {
      a.terms.emplace(mono, coeff);
    } else {
      it->second += coeff;
      if (isZero(it->second)) a.terms.erase(it);
    }
  }
  return a;
}

AlgElement operator-(const AlgElement& a, const AlgElement& b) {
  return a + Rat(-1) * b;
}

AlgElement operator*(const Rat& c, const AlgElement& a) {
  AlgElement out;
  if (isZero(c)) return out;
  for (const auto& [mono, coeff] : a.terms) out.terms.emplace(mono, c * coeff);
  return out;
}

GradedAlgebra::GradedAlgebra(std::vector<Generator> gens) : gens_(std::move(gens)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].degree < 1)
      throw Error(errc::DimensionMismatch, "generator degree must be positive: " + gens_[i].name);
    auto [it, fresh] = index_.emplace(gens_[i].name, i);
    if (!fresh) throw Error(errc::UnknownName, "duplicate generator name: " + gens_[i].name);
    maxDegree_ = std::max(maxDegree_, gens_[i].degree);
  }
}

std::optional<std::size_t> GradedAlgebra::genIndex(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

AlgElement GradedAlgebra::one() const {
  AlgElement e;
  e.terms.emplace(unitMonomial(), Rat(1));
  return e;
}

AlgElement GradedAlgebra::genElement(std::size_t i) const {
  Monomial m = unitMonomial();
  m[i] = 1;
  return monomialElement(m);
}

AlgElement GradedAlgebra::monomialElement(const Monomial& m, Rat coeff) const {
  AlgElement e;
  if (!isZero(coeff)) e.terms.emplace(m, std::move(coeff));
  return e;
}

int GradedAlgebra::degreeOf(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<int>(m[i]) * gens_[i].degree;
  return d;
}

std::optional<int> GradedAlgebra::homogeneousDegree(const AlgElement& e) const {
  std::optional<int> deg;
  for (const auto& [mono, coeff] : e.terms) {
    int d = degreeOf(mono);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

bool GradedAlgebra::isHomogeneousOfDegree(const AlgElement& e, int degree) const {
  for (const auto& [mono, coeff] : e.terms)
    if (degreeOf(mono) != degree) return false;
  return true;
}

void GradedAlgebra::enumerateBasis(int remaining, std::size_t fromGen, Monomial& current,
                                   std::vector<Monomial>& out) const {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = fromGen; i < gens_.size(); ++i) {
    int d = gens_[i].degree;
    if (d > remaining) continue;
    std::uint32_t maxExp = gens_[i].odd() ? 1u : static_cast<std::uint32_t>(remaining / d);
    for (std::uint32_t e = 1; e <= maxExp; ++e) {
      current[i] = e;
      enumerateBasis(remaining - static_cast<int>(e) * d, i + 1, current, out);
    }
    current[i] = 0;
  }
}

std::vector<Monomial> GradedAlgebra::monomialBasis(int degree) const {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial current = unitMonomial();
  enumerateBasis(degree, 0, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::pair<Monomial, int>> GradedAlgebra::mulMonomial(const Monomial& a,
                                                                   const Monomial& b) const {
  Monomial prod(gens_.size(), 0);
  // Koszul sign: each odd letter of b crosses the odd letters of a that sit
  // at strictly larger generator index.
  long crossings = 0;
  long oddTailOfA = 0;  // odd letters of a with index > current position, built backwards
  std::vector<std::uint8_t> aOdd(gens_.size(), 0);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].odd()) {
      if (a[i] > 0 && b[i] > 0) return std::nullopt;  // odd square
      aOdd[i] = a[i] > 0 ? 1 : 0;
    }
    prod[i] = a[i] + b[i];
  }
  for (std::size_t q = gens_.size(); q-- > 0;) {
    if (gens_[q].odd() && b[q] > 0) crossings += oddTailOfA;
    if (aOdd[q]) ++oddTailOfA;
  }
  return std::make_pair(std::move(prod), crossings % 2 == 0 ? 1 : -1);
}

AlgElement GradedAlgebra::mul(const AlgElement& a, const AlgElement& b) const {
  AlgElement out;
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      auto prod = mulMonomial(ma, mb);
      if (!prod) continue;
      Rat coeff = ca * cb;
      if (prod->second < 0) coeff = -coeff;
      auto it = out.terms.find(prod->first);
      if (it == out.terms.end()) {
        if (!isZero(coeff)) out.terms.emplace(std::move(prod->first), std::move(coeff));
      } else {
        it->second += coeff;
        if (isZero(it->second)) out.terms.erase(it);
      }
    }
  }
  return out;
}

AlgElement GradedAlgebra::leibnizApply(std::span<const AlgElement> images, int shift,
                                       const AlgElement& target) const {
  if (images.size() != gens_.size())
    throw Error(errc::DimensionMismatch, "one image per generator required");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (images[i].isZero()) continue;
    if (!isHomogeneousOfDegree(images[i], gens_[i].degree - shift))
      throw Error(errc::InhomogeneousImage,
                  "image of " + gens_[i].name + " must be homogeneous of degree " +
                      std::to_string(gens_[i].degree - shift));
  }

  AlgElement out;
  for (const auto& [mono, coeff] : target.terms) {
    // Walk the factors g^e in canonical order; the derivation hits each in
    // turn, crossing the prefix with sign (-1)^{shift * |prefix|}.
    int prefixDegree = 0;
    Monomial prefix = unitMonomial();
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (mono[i] == 0 || images[i].isZero()) {
        prefixDegree += static_cast<int>(mono[i]) * gens_[i].degree;
        prefix[i] = mono[i];
        continue;
      }
      // inner = e * g^{e-1} * image(g); for odd g the exponent is 1.
      Monomial innerMono = unitMonomial();
      innerMono[i] = mono[i] - 1;
      AlgElement inner = mul(monomialElement(innerMono, Rat(static_cast<long>(mono[i]))), images[i]);

      Monomial suffix = unitMonomial();
      for (std::size_t j = i + 1; j < gens_.size(); ++j) suffix[j] = mono[j];

      AlgElement term = mul(monomialElement(prefix), mul(inner, monomialElement(suffix)));
      Rat c = coeff;
      if ((shift * prefixDegree) % 2 != 0) c = -c;
      out += c * term;

      prefixDegree += static_cast<int>(mono[i]) * gens_[i].degree;
      prefix[i] = mono[i];
    }
  }
  return out;
}

AlgElement GradedAlgebra::projectToFirst(const AlgElement& e, std::size_t keepCount) const {
  AlgElement out;
  for (const auto& [mono, coeff] : e.terms) {
    bool pure = true;
    for (std::size_t i = keepCount; i < mono.size(); ++i)
      if (mono[i] != 0) { pure = false; break; }
    if (pure) out.terms.emplace(mono, coeff);
  }
  return out;
}

std::string GradedAlgebra::toString(const Monomial& m) const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (any) os << "*";
    os << gens_[i].name;
    if (m[i] > 1) os << "^" << m[i];
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

std::string GradedAlgebra::toString(const AlgElement& e) const {
  if (e.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, coeff] : e.terms) {
    Rat c = coeff;
    if (first) {
      if (sgn(c) < 0) { os << "-"; c = -c; }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    bool unitMono = degreeOf(mono) == 0;
    if (c != 1 || unitMono) {
      os << derlie::toString(c);
      if (!unitMono) os << "*";
    }
    if (!unitMono) os << toString(mono);
    first = false;
  }
  return os.str();
}

}  // namespace derlie
