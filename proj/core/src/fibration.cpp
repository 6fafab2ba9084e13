#include "derlie/fibration.hpp"

#include <algorithm>

#include "derlie/cohomology.hpp"
#include "derlie/error.hpp"

namespace derlie {

FibrationAnalysis::FibrationAnalysis(const RelativeModel& rm)
    : rm_(&rm),
      base_(rm.base()),
      fiber_(rm.total(), DerPart::Fiber, rm.baseCount()),
      full_(rm.total()) {}

Derivation FibrationAnalysis::zeroExtend(const Derivation& baseDer) const {
  Derivation out = zeroDerivation(rm_->total(), baseDer.shift);
  for (std::size_t i = 0; i < rm_->baseCount(); ++i)
    out.images[i] = rm_->embedBase(baseDer.images[i]);
  return out;
}

std::pair<Derivation, Derivation> FibrationAnalysis::split(const Derivation& totalDer) const {
  Derivation basePart = zeroDerivation(rm_->total(), totalDer.shift);
  Derivation fiberPart = zeroDerivation(rm_->total(), totalDer.shift);
  for (std::size_t i = 0; i < rm_->total().genCount(); ++i) {
    if (rm_->isFiberGen(i))
      fiberPart.images[i] = totalDer.images[i];
    else
      basePart.images[i] = totalDer.images[i];
  }
  return {std::move(basePart), std::move(fiberPart)};
}

Derivation FibrationAnalysis::tau(const Derivation& totalDer) const {
  return split(derBoundary(rm_->total(), totalDer)).second;
}

TauMap tauMatrix(const FibrationAnalysis& fa, int degree) {
  const DerComplex& full = fa.fullComplex();
  const DerComplex& fiber = fa.fiberComplex();
  const auto& from = full.basis(degree);
  const auto& to = fiber.basis(degree - 1);

  TauMap tm;
  tm.degree = degree;
  tm.matrix = RatMatrix(to.size(), from.size());
  for (std::size_t c = 0; c < from.size(); ++c) {
    Derivation t = fa.tau(elementary(fa.relative().total(), from[c]));
    auto coords = fiber.coordinates(degree - 1, t);
    if (!coords)
      throw Error(errc::DimensionMismatch, "tau image outside the fiber slice basis");
    for (std::size_t r = 0; r < to.size(); ++r) tm.matrix.at(r, c) = (*coords)[r];
  }
  return tm;
}

Derivation bfProject(const FibrationAnalysis& fa, const Derivation& totalDer) {
  const RelativeModel& rm = fa.relative();
  if (!rm.separability().separable)
    throw Error(errc::NotSeparable,
                rm.name() + ": b_f is a DGL map only for pi_Q-separable models");
  Derivation out = zeroDerivation(rm.base(), totalDer.shift);
  for (std::size_t i = 0; i < rm.baseCount(); ++i)
    out.images[i] = rm.restrictToBase(rm.projV(totalDer.images[i]));
  return out;
}

ProjectionCheck strictProjectionCheck(const FibrationAnalysis& fa) {
  const RelativeModel& rm = fa.relative();
  ProjectionCheck check;
  SeparabilityVerdict sep = rm.separability();
  check.separable = sep.separable;

  if (!sep.separable) {
    // The standard violation: with |w| < |v|, (v,1) = [(w,1),(v,w)] maps to a
    // nonzero derivation while both bracket factors map to zero.
    check.pass = false;
    check.witnessFiberGen = sep.witness->first;
    check.witnessBaseGen = sep.witness->second;
    check.violations.push_back(
        "proj fails on the bracket [(" + sep.witness->first + ",1),(" + sep.witness->second +
        "," + sep.witness->first + ")] = (" + sep.witness->second + ",1)");
    return check;
  }

  const SullivanModel& total = rm.total();
  const SullivanModel& base = rm.base();
  const DerComplex& full = fa.fullComplex();

  check.pass = true;
  std::vector<std::pair<int, ElemDer>> all;
  for (int n = 1; n <= full.maxDegree(); ++n)
    for (const ElemDer& e : full.basis(n)) all.emplace_back(n, e);

  for (const auto& [n, e] : all) {
    Derivation sigma = elementary(total, e);
    Derivation lhs = bfProject(fa, derBoundary(total, sigma));
    Derivation rhs = derBoundary(base, bfProject(fa, sigma));
    if (!(lhs == rhs)) {
      check.pass = false;
      check.violations.push_back("boundary compatibility fails on " + toString(total, e));
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i; j < all.size(); ++j) {
      Derivation s = elementary(total, all[i].second);
      Derivation t = elementary(total, all[j].second);
      Derivation lhs = bfProject(fa, derBracket(total, s, t));
      Derivation rhs = derBracket(base, bfProject(fa, s), bfProject(fa, t));
      ++check.pairsChecked;
      if (!(lhs == rhs)) {
        check.pass = false;
        check.violations.push_back("bracket compatibility fails on " +
                                   toString(total, all[i].second) + ", " +
                                   toString(total, all[j].second));
      }
    }
  }
  return check;
}

DeltaImage connectingDelta(const FibrationAnalysis& fa, const Derivation& baseCycle) {
  const RelativeModel& rm = fa.relative();
  if (!rm.separability().separable)
    throw Error(errc::NotSeparable, rm.name() + ": delta_f needs a separable model");
  const int n = baseCycle.shift;
  if (n <= 1)
    throw Error(errc::BadRange,
                "degree-1 base classes map outside the positive-degree fiber complex");
  if (!derBoundary(rm.base(), baseCycle).isZero())
    throw Error(errc::NotACycle, "representative is not a boundary-cycle of Der(Lambda V)");

  Derivation extended = fa.zeroExtend(baseCycle);
  Derivation boundary = derBoundary(rm.total(), extended);
  auto [basePart, fiberPart] = fa.split(boundary);
  if (!basePart.isZero())
    throw Error(errc::NotACycle, "zero-extension left a base component in the boundary");

  DeltaImage image;
  image.baseDegree = n;
  image.tau = std::move(fiberPart);
  auto coords = fa.fiberComplex().coordinates(n - 1, image.tau);
  if (!coords) throw Error(errc::DimensionMismatch, "tau image outside fiber slice basis");
  image.coords = std::move(*coords);
  image.zeroClass = fa.fiberComplex().isBoundary(n - 1, image.coords);
  return image;
}

SectionVerdict sectionExists(const FibrationAnalysis& fa) {
  const RelativeModel& rm = fa.relative();
  if (!rm.separability().separable)
    throw Error(errc::NotSeparable, rm.name() + ": the section criterion needs separability");

  SectionVerdict verdict;
  const DerComplex& base = fa.baseComplex();
  verdict.scanBound = base.maxDegree();
  verdict.exists = true;

  for (int n = 1; n <= base.maxDegree(); ++n) {
    HomologySlice h = base.homology(n);
    if (n == 1) {
      verdict.excludedDegreeOneClasses = h.dim;
      continue;
    }
    for (const RatVec& rep : h.reps) {
      Derivation sigma = base.toDerivation(n, rep);
      DeltaImage img = connectingDelta(fa, sigma);
      if (!img.zeroClass) {
        verdict.exists = false;
        verdict.failingDegree = n;
        verdict.failingBaseClass = std::move(sigma);
        verdict.failingDeltaImage = std::move(img.tau);
        return verdict;
      }
    }
  }
  return verdict;
}

OddSphereVerdict oddSphereTriviality(const FibrationAnalysis& fa) {
  const RelativeModel& rm = fa.relative();
  if (rm.baseCount() != 1 || !rm.base().algebra().gen(0).odd())
    throw Error(errc::BaseNotOddSphere,
                rm.name() + ": base must be Lambda(v) on a single odd generator");

  Derivation v1 = elementary(rm.base(), ElemDer{0, rm.base().algebra().unitMonomial()});
  Derivation boundary = derBoundary(rm.total(), fa.zeroExtend(v1));

  OddSphereVerdict verdict;
  for (std::size_t i = rm.baseCount(); i < rm.total().genCount(); ++i) {
    if (!boundary.images[i].isZero()) {
      verdict.outcome = OddSphereOutcome::MapNullHomotopic;
      verdict.witnessFiberGen = rm.total().algebra().gen(i).name;
      return verdict;
    }
  }
  verdict.outcome = OddSphereOutcome::FibreTrivial;
  return verdict;
}

HomologySlice relDerHomology(const FibrationAnalysis& fa, int n) {
  return fa.fiberComplex().homology(n);
}

PiOddVerdict piOddVanishing(const FibrationAnalysis& fa) {
  const RelativeModel& rm = fa.relative();
  if (!rm.separability().separable)
    throw Error(errc::NotSeparable, rm.name() + ": pi_odd test needs separability");

  PiOddVerdict verdict;
  const DerComplex& fiber = fa.fiberComplex();
  verdict.scanBound = fiber.maxDegree();
  verdict.vanishes = true;
  for (int n = 2; n <= fiber.maxDegree(); n += 2) {
    HomologySlice h = fiber.homology(n);
    for (const RatVec& rep : h.reps) {
      verdict.vanishes = false;
      verdict.witnesses.emplace_back(n, fiber.toDerivation(n, rep));
    }
  }
  return verdict;
}

std::size_t fiberDimsFormula(const FibrationAnalysis& fa, int n, int cohomologyCutoff) {
  const RelativeModel& rm = fa.relative();

  std::vector<Generator> fiberGens;
  for (std::size_t i = rm.baseCount(); i < rm.total().genCount(); ++i)
    fiberGens.push_back(rm.total().algebra().gen(i));
  if (fiberGens.empty()) return 0;
  GradedAlgebra fiberAlg(fiberGens);

  int maxShift = fiberAlg.maxGenDegree();
  int neededCohomology = maxShift - n;
  if (neededCohomology > cohomologyCutoff)
    throw Error(errc::CutoffInsufficient,
                "H^j(Lambda V) needed up to j = " + std::to_string(neededCohomology) +
                    ", cutoff is " + std::to_string(cohomologyCutoff));

  CohomologyTable baseCohomology = cdgaCohomology(rm.base(), cohomologyCutoff);

  std::size_t total = 0;
  for (int i = 1; i <= maxShift; ++i) {
    std::size_t derDim = 0;
    for (const Generator& w : fiberGens) {
      int target = w.degree - i;
      if (target < 0) continue;
      derDim += fiberAlg.monomialBasis(target).size();
    }
    if (derDim == 0) continue;
    int j = i - n;
    if (j < 0) continue;
    total += derDim * baseCohomology.dim(j);
  }
  return total;
}

std::vector<RatVec> rhoImageSpan(const FibrationAnalysis& fa, int shift, int cohomologyCutoff) {
  const RelativeModel& rm = fa.relative();
  const SullivanModel& total = rm.total();
  const DerComplex& fiber = fa.fiberComplex();
  std::vector<RatVec> out;
  if (shift < 0) return out;

  CohomologyTable baseH = cdgaCohomology(rm.base(), cohomologyCutoff);
  std::vector<Generator> fiberGens;
  for (std::size_t i = rm.baseCount(); i < total.genCount(); ++i)
    fiberGens.push_back(total.algebra().gen(i));
  if (fiberGens.empty()) return out;
  GradedAlgebra fiberAlg(fiberGens);

  for (std::size_t w = rm.baseCount(); w < total.genCount(); ++w) {
    int wDeg = total.algebra().gen(w).degree;
    for (int j = 0; j <= cohomologyCutoff; ++j) {
      for (const AlgElement& h : baseH.reps[static_cast<std::size_t>(j)]) {
        int mDeg = wDeg - shift - j;
        if (mDeg < 0) continue;
        for (const Monomial& fm : fiberAlg.monomialBasis(mDeg)) {
          Monomial big(total.genCount(), 0);
          for (std::size_t k = 0; k < fiberGens.size(); ++k) big[rm.baseCount() + k] = fm[k];
          AlgElement image =
              total.algebra().mul(total.algebra().monomialElement(big), rm.embedBase(h));
          if (image.isZero()) continue;
          Derivation d = zeroDerivation(total, shift);
          d.images[w] = std::move(image);
          auto coords = fiber.coordinates(shift, d);
          if (!coords)
            throw Error(errc::DimensionMismatch, "rho image outside the fiber slice");
          out.push_back(std::move(*coords));
        }
      }
    }
  }
  return out;
}

std::size_t rhoSubcomplexHomologyDim(const FibrationAnalysis& fa, int n, int cohomologyCutoff) {
  const DerComplex& fiber = fa.fiberComplex();
  if (n < 1 || n > fiber.maxDegree()) return 0;

  std::vector<RatVec> spanN = rhoImageSpan(fa, n, cohomologyCutoff);
  SpanBuilder independent(fiber.basis(n).size());
  std::vector<RatVec> basisN;
  for (const RatVec& v : spanN)
    if (independent.add(v)) basisN.push_back(v);

  // cycles of the restriction of the boundary to the rho image
  const RatMatrix& del = fiber.boundaryMatrix(n);
  RatMatrix restricted(fiber.basis(n - 1).size(), basisN.size());
  for (std::size_t c = 0; c < basisN.size(); ++c) {
    RatVec img = del.apply(basisN[c]);
    for (std::size_t r = 0; r < img.size(); ++r) restricted.at(r, c) = img[r];
  }
  std::size_t cycles = kernelBasis(restricted).size();

  // boundaries arriving from the rho image one shift up
  SpanBuilder bnd(fiber.basis(n).size());
  std::size_t rankBnd = 0;
  const RatMatrix& delUp = fiber.boundaryMatrix(n + 1);
  if (delUp.cols() > 0)
    for (const RatVec& v : rhoImageSpan(fa, n + 1, cohomologyCutoff))
      if (bnd.add(delUp.apply(v))) ++rankBnd;
  return cycles - rankBnd;
}

std::size_t deltaRank(const FibrationAnalysis& fa, int n) {
  if (n < 2 || n > fa.baseComplex().maxDegree()) return 0;
  HomologySlice h = fa.baseComplex().homology(n);
  if (h.dim == 0) return 0;

  const DerComplex& fiber = fa.fiberComplex();
  std::size_t ambient = fiber.basis(n - 1).size();
  SpanBuilder span(ambient);
  for (const RatVec& b : fiber.boundarySpan(n - 1)) span.add(b);

  std::size_t rank = 0;
  for (const RatVec& rep : h.reps) {
    DeltaImage img = connectingDelta(fa, fa.baseComplex().toDerivation(n, rep));
    if (span.add(img.coords)) ++rank;
  }
  return rank;
}

}  // namespace derlie
