#include "derlie/sullivan.hpp"

#include <algorithm>

#include "derlie/error.hpp"

namespace derlie {

SullivanModel::SullivanModel(std::string name, std::vector<Generator> gens,
                             std::vector<AlgElement> diff)
    : name_(std::move(name)), alg_(std::move(gens)), diff_(std::move(diff)) {
  diff_.resize(alg_.genCount());
}

AlgElement SullivanModel::d(const AlgElement& e) const {
  return alg_.leibnizApply(diff_, -1, e);
}

ValidationReport SullivanModel::validate() const {
  ValidationReport report;
  for (std::size_t i = 0; i < alg_.genCount(); ++i) {
    const Generator& g = alg_.gen(i);
    const AlgElement& img = diff_[i];
    if (!img.isZero() && !alg_.isHomogeneousOfDegree(img, g.degree + 1)) {
      report.pass = false;
      report.issues.push_back({g.name, "degree",
                               "d(" + g.name + ") must be homogeneous of degree " +
                                   std::to_string(g.degree + 1)});
      continue;
    }
    // Minimality: no term of word length < 2.
    for (const auto& [mono, coeff] : img.terms) {
      std::uint64_t wordLength = 0;
      for (auto e : mono) wordLength += e;
      if (wordLength < 2) {
        report.minimal = false;
        report.issues.push_back({g.name, "minimality",
                                 "d(" + g.name + ") has the linear term " + alg_.toString(mono)});
        break;
      }
    }
  }
  if (!report.pass) return report;  // d cannot be evaluated on malformed degrees

  for (std::size_t i = 0; i < alg_.genCount(); ++i) {
    AlgElement dd = d(diff_[i]);
    if (!dd.isZero()) {
      report.pass = false;
      report.issues.push_back({alg_.gen(i).name, "d-squared",
                               "d(d(" + alg_.gen(i).name + ")) = " + alg_.toString(dd)});
    }
  }
  return report;
}

Classification SullivanModel::classify() const {
  Classification c;
  c.pure = true;
  for (std::size_t i = 0; i < alg_.genCount(); ++i) {
    if (alg_.gen(i).odd()) {
      ++c.oddGens;
    } else {
      ++c.evenGens;
      if (!diff_[i].isZero()) c.pure = false;
    }
  }
  c.f0Candidate = c.pure && c.evenGens == c.oddGens;
  return c;
}

RelativeModel::RelativeModel(std::string name, SullivanModel total, std::size_t baseCount,
                             std::string baseName)
    : name_(std::move(name)),
      baseName_(baseName.empty() ? name_ + ".base" : std::move(baseName)),
      total_(std::move(total)),
      baseCount_(baseCount) {
  if (baseCount_ > total_.genCount())
    throw Error(errc::DimensionMismatch, "base generator count exceeds total");
  // D restricted to the base must stay inside Lambda V.
  for (std::size_t i = 0; i < baseCount_; ++i) {
    const AlgElement& img = total_.diffOf(i);
    if (!(projV(img) == img))
      throw Error(errc::NotAKSExtension,
                  "D(" + total_.algebra().gen(i).name + ") leaves the base algebra");
  }
  base();  // materialize the view now so later reads are const and shareable
}

const SullivanModel& RelativeModel::base() const {
  if (!baseCache_) {
    std::vector<Generator> gens;
    std::vector<AlgElement> diff;
    for (std::size_t i = 0; i < baseCount_; ++i) {
      gens.push_back(total_.algebra().gen(i));
      diff.push_back(restrictToBase(total_.diffOf(i)));
    }
    baseCache_ = std::make_shared<const SullivanModel>(baseName_, std::move(gens),
                                                       std::move(diff));
  }
  return *baseCache_;
}

AlgElement RelativeModel::embedBase(const AlgElement& e) const {
  AlgElement out;
  for (const auto& [mono, coeff] : e.terms) {
    Monomial m(total_.genCount(), 0);
    std::copy(mono.begin(), mono.end(), m.begin());
    out.terms.emplace(std::move(m), coeff);
  }
  return out;
}

AlgElement RelativeModel::restrictToBase(const AlgElement& e) const {
  AlgElement out;
  for (const auto& [mono, coeff] : e.terms) {
    for (std::size_t i = baseCount_; i < mono.size(); ++i)
      if (mono[i] != 0)
        throw Error(errc::DimensionMismatch, "element has fiber support: " +
                                                 total_.algebra().toString(mono));
    Monomial m(mono.begin(), mono.begin() + static_cast<long>(baseCount_));
    out.terms.emplace(std::move(m), coeff);
  }
  return out;
}

SeparabilityVerdict RelativeModel::separability() const { return isPiQSeparable(*this); }

SeparabilityVerdict isPiQSeparable(const RelativeModel& rm) {
  SeparabilityVerdict v;
  const auto& alg = rm.total().algebra();
  std::optional<std::size_t> minFiberIdx;
  for (std::size_t i = 0; i < rm.baseCount(); ++i)
    v.maxBase = std::max(v.maxBase, alg.gen(i).degree);
  for (std::size_t i = rm.baseCount(); i < alg.genCount(); ++i) {
    if (!v.minFiber || alg.gen(i).degree < *v.minFiber) {
      v.minFiber = alg.gen(i).degree;
      minFiberIdx = i;
    }
  }
  v.separable = !v.minFiber || *v.minFiber >= v.maxBase;
  if (!v.separable) {
    // witness pair (w, v): the lowest fiber generator against the first base
    // generator of strictly larger degree
    for (std::size_t i = 0; i < rm.baseCount(); ++i) {
      if (alg.gen(i).degree > *v.minFiber) {
        v.witness = std::make_pair(alg.gen(*minFiberIdx).name, alg.gen(i).name);
        break;
      }
    }
  }
  return v;
}

}  // namespace derlie
