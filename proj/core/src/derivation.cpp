#include "derlie/derivation.hpp"

#include <algorithm>
#include <sstream>

#include "derlie/error.hpp"

namespace derlie {

bool Derivation::isZero() const {
  return std::all_of(images.begin(), images.end(),
                     [](const AlgElement& e) { return e.isZero(); });
}

Derivation zeroDerivation(const SullivanModel& m, int shift) {
  return Derivation{shift, std::vector<AlgElement>(m.genCount())};
}

Derivation operator+(const Derivation& a, const Derivation& b) {
  Derivation out = a;
  for (std::size_t i = 0; i < out.images.size(); ++i) out.images[i] += b.images[i];
  return out;
}

Derivation operator-(const Derivation& a, const Derivation& b) {
  return a + Rat(-1) * b;
}

Derivation operator*(const Rat& c, const Derivation& a) {
  Derivation out{a.shift, {}};
  out.images.reserve(a.images.size());
  for (const AlgElement& img : a.images) out.images.push_back(c * img);
  return out;
}

std::string toString(const SullivanModel& m, const ElemDer& e) {
  return "(" + m.algebra().gen(e.gen).name + "," + m.algebra().toString(e.mono) + ")";
}

std::string toString(const SullivanModel& m, const Derivation& d) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < d.images.size(); ++i) {
    if (d.images[i].isZero()) continue;
    if (any) os << " ; ";
    os << "(" << m.algebra().gen(i).name << " -> " << m.algebra().toString(d.images[i]) << ")";
    any = true;
  }
  return any ? os.str() : "0";
}

Derivation elementary(const SullivanModel& m, const ElemDer& e, Rat coeff) {
  Derivation out = zeroDerivation(m, m.algebra().gen(e.gen).degree - m.algebra().degreeOf(e.mono));
  out.images[e.gen] = m.algebra().monomialElement(e.mono, std::move(coeff));
  return out;
}

Derivation elementary(const SullivanModel& m, const std::string& gen, const AlgElement& image) {
  auto idx = m.algebra().genIndex(gen);
  if (!idx) throw Error(errc::UnknownName, "no generator named " + gen);
  auto deg = m.algebra().homogeneousDegree(image);
  if (!deg) {
    if (!image.isZero())
      throw Error(errc::InhomogeneousImage, "elementary derivation image must be homogeneous");
    deg = 0;
  }
  Derivation out = zeroDerivation(m, m.algebra().gen(*idx).degree - *deg);
  out.images[*idx] = image;
  return out;
}

AlgElement applyDerivation(const SullivanModel& m, const Derivation& sigma, const AlgElement& x) {
  return m.algebra().leibnizApply(sigma.images, sigma.shift, x);
}

Derivation derBoundary(const SullivanModel& m, const Derivation& sigma) {
  Derivation out = zeroDerivation(m, sigma.shift - 1);
  const int sign = sigma.shift % 2 == 0 ? 1 : -1;
  for (std::size_t i = 0; i < m.genCount(); ++i) {
    AlgElement value = m.d(sigma.images[i]) - Rat(sign) * applyDerivation(m, sigma, m.diffOf(i));
    out.images[i] = std::move(value);
  }
  return out;
}

Derivation derBracket(const SullivanModel& m, const Derivation& sigma, const Derivation& tau) {
  Derivation out = zeroDerivation(m, sigma.shift + tau.shift);
  const int sign = (sigma.shift * tau.shift) % 2 == 0 ? 1 : -1;
  for (std::size_t i = 0; i < m.genCount(); ++i) {
    out.images[i] = applyDerivation(m, sigma, tau.images[i]) -
                    Rat(sign) * applyDerivation(m, tau, sigma.images[i]);
  }
  return out;
}

std::vector<ElemDer> derivationBasis(const SullivanModel& m, int shift) {
  std::vector<ElemDer> out;
  for (std::size_t g = 0; g < m.genCount(); ++g) {
    int target = m.algebra().gen(g).degree - shift;
    if (target < 0) continue;
    for (const Monomial& mono : m.algebra().monomialBasis(target))
      out.push_back({g, mono});
  }
  return out;
}

bool DerComplex::keepGen(std::size_t genIdx) const {
  return part_ == DerPart::Full || genIdx >= baseCount_;
}

DerComplex::DerComplex(const SullivanModel& m, DerPart part, std::size_t baseCount)
    : model_(&m), part_(part), baseCount_(baseCount) {
  maxDegree_ = 0;
  for (std::size_t g = 0; g < m.genCount(); ++g)
    if (keepGen(g)) maxDegree_ = std::max(maxDegree_, m.algebra().gen(g).degree);

  slices_.resize(static_cast<std::size_t>(maxDegree_) + 1);
  for (int n = 0; n <= maxDegree_; ++n) {
    slices_[static_cast<std::size_t>(n)].degree = n;
    for (const ElemDer& e : derivationBasis(m, n))
      if (keepGen(e.gen)) slices_[static_cast<std::size_t>(n)].basis.push_back(e);
  }

  // index of each (gen, mono) pair per degree, for expanding boundaries
  for (int n = 1; n <= maxDegree_; ++n) {
    const auto& from = slices_[static_cast<std::size_t>(n)].basis;
    const auto& to = slices_[static_cast<std::size_t>(n - 1)].basis;
    std::map<std::pair<std::size_t, Monomial>, std::size_t> toIndex;
    for (std::size_t i = 0; i < to.size(); ++i) toIndex.emplace(std::make_pair(to[i].gen, to[i].mono), i);

    RatMatrix mat(to.size(), from.size());
    for (std::size_t c = 0; c < from.size(); ++c) {
      Derivation b = derBoundary(m, elementary(m, from[c]));
      for (std::size_t g = 0; g < m.genCount(); ++g) {
        for (const auto& [mono, coeff] : b.images[g].terms) {
          auto it = toIndex.find(std::make_pair(g, mono));
          if (it == toIndex.end()) {
            // A component on a dropped generator would mean the fiber part is
            // not a subcomplex; a missing monomial would mean a degree error.
            throw Error(errc::DimensionMismatch,
                        "boundary of " + toString(m, from[c]) + " leaves the slice basis");
          }
          mat.at(it->second, c) = coeff;
        }
      }
    }
    slices_[static_cast<std::size_t>(n)].boundary = std::move(mat);
  }
}

const ChainSlice& DerComplex::slice(int n) const {
  static const ChainSlice empty;
  if (n < 0 || n > maxDegree_) return empty;
  return slices_[static_cast<std::size_t>(n)];
}

const std::vector<ElemDer>& DerComplex::basis(int n) const { return slice(n).basis; }

const RatMatrix& DerComplex::boundaryMatrix(int n) const {
  static const RatMatrix empty;
  if (n < 1) return empty;
  return slice(n).boundary;
}

std::vector<RatVec> DerComplex::cycleBasis(int n) const {
  if (n < 1 || n > maxDegree_) return {};
  return kernelBasis(boundaryMatrix(n));
}

std::vector<RatVec> DerComplex::boundarySpan(int n) const {
  std::vector<RatVec> out;
  if (n + 1 > maxDegree_ || n < 0) return out;
  const RatMatrix& mat = boundaryMatrix(n + 1);
  for (std::size_t c = 0; c < mat.cols(); ++c) out.push_back(mat.column(c));
  return out;
}

HomologySlice DerComplex::homology(int n) const {
  HomologySlice h;
  h.degree = n;
  if (n < 1 || n > maxDegree_) return h;
  std::vector<RatVec> cycles = cycleBasis(n);
  SpanBuilder span(basis(n).size());
  for (const RatVec& b : boundarySpan(n)) span.add(b);
  for (RatVec& z : cycles) {
    if (span.add(z)) {
      h.reps.push_back(std::move(z));
      ++h.dim;
    }
  }
  return h;
}

std::vector<HomologyClass> DerComplex::homologyClasses(int n) const {
  std::vector<HomologyClass> out;
  for (RatVec& rep : homology(n).reps) {
    HomologyClass cls;
    cls.degree = n;
    cls.representative = toDerivation(n, rep);
    cls.coords = std::move(rep);
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<HomologySlice> DerComplex::allHomology() const {
  std::vector<HomologySlice> out;
  for (int n = 1; n <= maxDegree_; ++n) out.push_back(homology(n));
  return out;
}

Derivation DerComplex::toDerivation(int n, const RatVec& coords) const {
  const auto& b = basis(n);
  if (coords.size() != b.size())
    throw Error(errc::DimensionMismatch, "coordinate length disagrees with slice basis");
  Derivation out = zeroDerivation(*model_, n);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (isZero(coords[i])) continue;
    out.images[b[i].gen] += model_->algebra().monomialElement(b[i].mono, coords[i]);
  }
  return out;
}

std::optional<RatVec> DerComplex::coordinates(int n, const Derivation& d) const {
  if (d.shift != n) return std::nullopt;
  const auto& b = basis(n);
  std::map<std::pair<std::size_t, Monomial>, std::size_t> index;
  for (std::size_t i = 0; i < b.size(); ++i) index.emplace(std::make_pair(b[i].gen, b[i].mono), i);
  RatVec coords(b.size(), Rat(0));
  for (std::size_t g = 0; g < d.images.size(); ++g) {
    for (const auto& [mono, coeff] : d.images[g].terms) {
      auto it = index.find(std::make_pair(g, mono));
      if (it == index.end()) return std::nullopt;
      coords[it->second] = coeff;
    }
  }
  return coords;
}

bool DerComplex::isBoundary(int n, const RatVec& coords) const {
  SpanBuilder span(basis(n).size());
  for (const RatVec& b : boundarySpan(n)) span.add(b);
  return span.contains(coords);
}

bool DerComplex::sameClass(int n, const RatVec& a, const RatVec& b) const {
  RatVec diff(a.size());
  if (a.size() != b.size())
    throw Error(errc::DimensionMismatch, "class vectors live in different slices");
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  return isBoundary(n, diff);
}

std::map<int, std::size_t> piAutDims(const SullivanModel& m, int lo, int hi) {
  if (lo < 2) throw Error(errc::BadRange, "pi_n(Baut_1) is defined for n >= 2 here");
  DerComplex complex(m);
  std::map<int, std::size_t> out;
  for (int n = lo; n <= hi; ++n) {
    int h = n - 1;
    out[n] = (h >= 1 && h <= complex.maxDegree()) ? complex.homology(h).dim : 0;
  }
  return out;
}

}  // namespace derlie
