#include "derlie/cstar.hpp"

#include <algorithm>

#include "derlie/error.hpp"

namespace derlie {

namespace {

/// Expand a derivation in a slice basis, solving through a change of basis
/// when the chain group is a kernel subspace (degree 1).
RatVec expandInChainBasis(const DerComplex& complex, int degree,
                          const std::vector<RatVec>& chainBasis, const Derivation& d) {
  auto elemCoords = complex.coordinates(degree, d);
  if (!elemCoords)
    throw Error(errc::DimensionMismatch, "derivation outside the slice basis");
  auto combo = inSpan(chainBasis, *elemCoords);
  if (!combo)
    throw Error(errc::NotACycle, "derivation is not inside the degree-1 cycle space");
  return *combo;
}

}  // namespace

TruncatedDgl truncateDerDgl(const SullivanModel& m, int maxDegree) {
  DerComplex complex(m);
  TruncatedDgl L;
  L.exhaustive = maxDegree >= complex.maxDegree();
  maxDegree = std::min(maxDegree, complex.maxDegree());
  L.maxDegree = maxDegree;

  std::vector<RatVec> degreeOneBasis =
      maxDegree >= 1 ? complex.cycleBasis(1) : std::vector<RatVec>{};

  std::vector<std::vector<Derivation>> byDegree(static_cast<std::size_t>(maxDegree) + 1);
  std::vector<std::vector<std::size_t>> flatIndex(static_cast<std::size_t>(maxDegree) + 1);

  for (int n = 1; n <= maxDegree; ++n) {
    auto& group = byDegree[static_cast<std::size_t>(n)];
    if (n == 1) {
      for (const RatVec& v : degreeOneBasis) group.push_back(complex.toDerivation(1, v));
    } else {
      for (const ElemDer& e : complex.basis(n)) group.push_back(elementary(m, e));
    }
    for (const Derivation& d : group) {
      flatIndex[static_cast<std::size_t>(n)].push_back(L.degrees.size());
      L.degrees.push_back(n);
      L.labels.push_back(toString(m, d));
    }
  }

  auto expand = [&](int degree, const Derivation& d) {
    std::map<std::size_t, Rat> out;
    if (d.isZero()) return out;
    if (degree < 1 || degree > maxDegree)
      throw Error(errc::DimensionMismatch, "image leaves the truncation range");
    RatVec coords;
    if (degree == 1) {
      coords = expandInChainBasis(complex, 1, degreeOneBasis, d);
    } else {
      auto c = complex.coordinates(degree, d);
      if (!c) throw Error(errc::DimensionMismatch, "image outside slice basis");
      coords = *c;
    }
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (!isZero(coords[i]))
        out.emplace(flatIndex[static_cast<std::size_t>(degree)][i], coords[i]);
    return out;
  };

  L.boundary.assign(L.degrees.size(), {});
  for (int n = 2; n <= maxDegree; ++n) {
    const auto& group = byDegree[static_cast<std::size_t>(n)];
    for (std::size_t i = 0; i < group.size(); ++i) {
      Derivation b = derBoundary(m, group[i]);
      L.boundary[flatIndex[static_cast<std::size_t>(n)][i]] = expand(n - 1, b);
    }
  }

  for (int ni = 1; ni <= maxDegree; ++ni) {
    for (int nj = ni; nj <= maxDegree; ++nj) {
      // Above an exhaustive presentation every bracket vanishes identically
      // (derivation shifts are bounded by the top generator degree).
      if (ni + nj > maxDegree) continue;
      const auto& bi = byDegree[static_cast<std::size_t>(ni)];
      const auto& bj = byDegree[static_cast<std::size_t>(nj)];
      for (std::size_t i = 0; i < bi.size(); ++i) {
        for (std::size_t j = (ni == nj ? i : 0); j < bj.size(); ++j) {
          std::size_t fi = flatIndex[static_cast<std::size_t>(ni)][i];
          std::size_t fj = flatIndex[static_cast<std::size_t>(nj)][j];
          if (fi == fj && ni % 2 == 0) continue;  // [x,x] = 0 in even degree
          Derivation br = derBracket(m, bi[i], bj[j]);
          if (br.isZero()) continue;
          auto coeffs = expand(ni + nj, br);
          if (!coeffs.empty()) L.bracket.emplace(std::make_pair(fi, fj), std::move(coeffs));
        }
      }
    }
  }
  return L;
}

TruncatedDgl homologyDgl(const SullivanModel& m, int maxDegree) {
  DerComplex complex(m);
  TruncatedDgl L;
  L.exhaustive = maxDegree >= complex.maxDegree();
  maxDegree = std::min(maxDegree, complex.maxDegree());
  L.maxDegree = maxDegree;

  std::vector<std::vector<Derivation>> reps(static_cast<std::size_t>(maxDegree) + 1);
  std::vector<std::vector<RatVec>> repCoords(static_cast<std::size_t>(maxDegree) + 1);
  std::vector<std::vector<std::size_t>> flatIndex(static_cast<std::size_t>(maxDegree) + 1);
  for (int n = 1; n <= maxDegree; ++n) {
    HomologySlice h = complex.homology(n);
    for (RatVec& rep : h.reps) {
      flatIndex[static_cast<std::size_t>(n)].push_back(L.degrees.size());
      reps[static_cast<std::size_t>(n)].push_back(complex.toDerivation(n, rep));
      L.labels.push_back(toString(m, reps[static_cast<std::size_t>(n)].back()));
      repCoords[static_cast<std::size_t>(n)].push_back(std::move(rep));
      L.degrees.push_back(n);
    }
  }
  L.boundary.assign(L.degrees.size(), {});

  for (int ni = 1; ni <= maxDegree; ++ni) {
    for (int nj = ni; nj <= maxDegree; ++nj) {
      int target = ni + nj;
      if (target > maxDegree) continue;
      const auto& ri = reps[static_cast<std::size_t>(ni)];
      const auto& rj = reps[static_cast<std::size_t>(nj)];
      for (std::size_t i = 0; i < ri.size(); ++i) {
        for (std::size_t j = (ni == nj ? i : 0); j < rj.size(); ++j) {
          std::size_t fi = flatIndex[static_cast<std::size_t>(ni)][i];
          std::size_t fj = flatIndex[static_cast<std::size_t>(nj)][j];
          if (fi == fj && ni % 2 == 0) continue;
          Derivation br = derBracket(m, ri[i], rj[j]);
          if (br.isZero()) continue;
          auto coords = complex.coordinates(target, br);
          if (!coords) throw Error(errc::DimensionMismatch, "bracket outside slice basis");
          // class of the bracket: combination of chosen reps modulo boundaries
          std::vector<RatVec> span = repCoords[static_cast<std::size_t>(target)];
          std::vector<RatVec> boundaries = complex.boundarySpan(target);
          span.insert(span.end(), boundaries.begin(), boundaries.end());
          auto combo = inSpan(span, *coords);
          if (!combo) throw Error(errc::NotACycle, "bracket of cycles left the cycle space");
          std::map<std::size_t, Rat> entry;
          for (std::size_t r = 0; r < repCoords[static_cast<std::size_t>(target)].size(); ++r)
            if (!isZero((*combo)[r]))
              entry.emplace(flatIndex[static_cast<std::size_t>(target)][r], (*combo)[r]);
          if (!entry.empty()) L.bracket.emplace(std::make_pair(fi, fj), std::move(entry));
        }
      }
    }
  }
  return L;
}

CStarResult cstarModel(const TruncatedDgl& L, int cutoff) {
  if (cutoff < 2) throw Error(errc::CutoffTooSmall, "cutoff must be at least 2");

  std::vector<std::size_t> kept;
  for (std::size_t a = 0; a < L.size(); ++a)
    if (L.degrees[a] + 1 <= cutoff) kept.push_back(a);
  if (kept.empty())
    throw Error(errc::CutoffTooSmall, "no dual generator fits below the cutoff");

  std::vector<std::size_t> position(L.size(), static_cast<std::size_t>(-1));
  std::vector<Generator> gens;
  for (std::size_t p = 0; p < kept.size(); ++p) {
    position[kept[p]] = p;
    gens.push_back({"s^-1" + L.labels[kept[p]] + "*", L.degrees[kept[p]] + 1});
  }

  GradedAlgebra alg(gens);
  std::vector<AlgElement> diff(gens.size());
  std::vector<std::string> truncated;

  for (std::size_t p = 0; p < kept.size(); ++p) {
    std::size_t a = kept[p];
    int na = L.degrees[a];
    bool sourcesKnown = na + 1 <= L.maxDegree || L.exhaustive;
    if (na + 2 > cutoff || !sourcesKnown) {
      truncated.push_back(gens[p].name);
      continue;
    }

    AlgElement image;
    // d1: coefficient (-1)^{n_b + 1} (del x_b)_a on the dual of x_b.
    for (std::size_t b = 0; b < L.size(); ++b) {
      if (L.degrees[b] != na + 1) continue;
      auto it = L.boundary[b].find(a);
      if (it == L.boundary[b].end() || position[b] == static_cast<std::size_t>(-1)) continue;
      Rat coeff = it->second;
      if ((L.degrees[b] + 1) % 2 != 0) coeff = -coeff;
      Monomial mono = alg.unitMonomial();
      mono[position[b]] = 1;
      image += alg.monomialElement(mono, coeff);
    }

    // d2: for i < j the coefficient of zeta_i zeta_j is
    // (-1)^{(n_j+1)(n_i+1)+n_j} B^a_{ij}; for i = j (odd degree) -B^a_{ii}/2.
    for (const auto& [pair, expansion] : L.bracket) {
      auto it = expansion.find(a);
      if (it == expansion.end()) continue;
      auto [i, j] = pair;
      if (position[i] == static_cast<std::size_t>(-1) ||
          position[j] == static_cast<std::size_t>(-1))
        continue;
      int ni = L.degrees[i];
      int nj = L.degrees[j];
      Rat coeff;
      if (i == j) {
        coeff = -it->second / 2;
      } else {
        coeff = it->second;
        if (((nj + 1) * (ni + 1) + nj) % 2 != 0) coeff = -coeff;
      }
      Monomial mono = alg.unitMonomial();
      mono[position[i]] += 1;
      mono[position[j]] += 1;
      image += alg.monomialElement(mono, coeff);
    }

    diff[p] = std::move(image);
  }

  return CStarResult{SullivanModel("C*", std::move(gens), std::move(diff)), cutoff,
                     std::move(truncated)};
}

}  // namespace derlie
