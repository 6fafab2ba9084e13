#ifndef DERLIE_CSTAR_HPP
#define DERLIE_CSTAR_HPP

#include <map>
#include <string>
#include <vector>

#include "derlie/derivation.hpp"
#include "derlie/sullivan.hpp"

namespace derlie {

/// Finite-type DGL in positive degrees presented by a flat basis with sparse
/// boundary and bracket tables. Elements are grouped by ascending degree;
/// bracket entries are stored for index pairs i <= j.
struct TruncatedDgl {
  int maxDegree = 0;        // basis is complete through this degree
  bool exhaustive = false;  // nothing lives above maxDegree at all
  std::vector<int> degrees;
  std::vector<std::string> labels;
  std::vector<std::map<std::size_t, Rat>> boundary;  // coefficient of element a in del(element b)
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rat>> bracket;

  std::size_t size() const { return degrees.size(); }
};

/// The derivation DGL of a model as a truncated presentation: elementary
/// basis in degrees >= 2, boundary-cycles in degree 1.
TruncatedDgl truncateDerDgl(const SullivanModel& m, int maxDegree);

/// The homology of Der(m) as an abelian-or-not DGL: representatives per
/// degree, zero boundary, brackets induced on classes.
TruncatedDgl homologyDgl(const SullivanModel& m, int maxDegree);

struct CStarResult {
  SullivanModel cdga;                     // generators dual to L, degree |z|+1
  int cutoff = 0;
  std::vector<std::string> truncatedGens;  // generators whose image fell past the cutoff
};

/// Cochain CDGA on the suspended dual of L with D = d1 + d2: d1 dual to the
/// boundary via <d1 s^-1 z; sx> = -<z; del x>, d2 dual to the bracket via
/// <d2 s^-1 z; sx1, sx2> = (-1)^{|x1|} <z; [x1,x2]>, with the pairing
/// <s^-1 z; sx> = (-1)^{|z|} <z; x>. Generators above the cutoff are dropped;
/// images that would land past the cutoff are zeroed and reported.
/// Throws Error(CutoffTooSmall) if no generator fits.
CStarResult cstarModel(const TruncatedDgl& L, int cutoff);

}  // namespace derlie

#endif
