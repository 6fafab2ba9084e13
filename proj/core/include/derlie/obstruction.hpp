#ifndef DERLIE_OBSTRUCTION_HPP
#define DERLIE_OBSTRUCTION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "derlie/fibration.hpp"
#include "derlie/lie_expr.hpp"

namespace derlie {

/// DGL-map data: generator name -> derivation image on whichever model the
/// map targets (the total model for maps out of L(B), the base model for the
/// attached-cell image).
struct DglMapData {
  std::map<std::string, Derivation> images;

  const Derivation* find(const std::string& gen) const {
    auto it = images.find(gen);
    return it == images.end() ? nullptr : &it->second;
  }
};

/// Homomorphic evaluation of a bracket expression: leaves through the map,
/// brackets through the derivation bracket. Throws Error(UnmappedGenerator)
/// when a leaf has no image.
Derivation lieEval(const SullivanModel& target, const DglMapData& map, const LieExpr& e,
                   int zeroShift);

struct MapCheckViolation {
  std::string generator;
  std::string detail;
};

struct MapCheckReport {
  bool pass = true;
  std::vector<MapCheckViolation> violations;
};

/// Chain condition del_target(h(g)) = h(del_q(g)) on every generator of q
/// that carries an image (the attached cell is skipped when unmapped).
MapCheckReport dglMapCheck(const QuillenData& q, const DglMapData& map,
                           const SullivanModel& target);

struct ObstructionReport {
  int classDegree = 0;          // N - 2
  Derivation tauPart;           // tau(h_Y(u))
  Derivation evalPart;          // h''_X(del_alpha(u))
  Derivation obstruction;       // their difference, a cycle in the fiber part
  RatVec coords;                // in the fiber slice basis
  bool zeroClass = false;       // zero iff a lift exists
  std::optional<Derivation> lift;  // q with del_X(q) = obstruction, when zero
};

/// The obstruction class [tau(h_Y(u)) - h''_X(del_alpha(u))] in
/// H_{N-2}(Der(Lambda W, Lambda V (x) Lambda W)). hX maps the skeleton
/// generators into Der(total); hYu is the cell image in Der(base), a
/// derivation of shift N-1. Checks: separability (NotSeparable), the
/// commutativity b_f h_X = h_Y i expressed through
/// del_Y(h_Y u) = b_f(h_X(del_alpha u)) (CommutativityFailure), and that the
/// difference is a cycle (NotACycle). When the class vanishes the
/// constructive lift q is solved for and returned.
ObstructionReport obstructionClass(const FibrationAnalysis& fa, const DglMapData& hX,
                                   const LieExpr& delAlphaU, const Derivation& hYu, int N);

struct CellScanEntry {
  std::string cell;
  int attachDegree = 0;  // N
  std::string status;    // "certified", "zero", "nonzero", "skipped: <why>"
  std::optional<ObstructionReport> report;
};

struct LiftScanReport {
  bool oddlyGraded = false;
  PiOddVerdict piOdd;
  bool certified = false;  // all lifts exist without per-cell computation
  std::vector<CellScanEntry> cells;
};

/// Skeletal lifting scan: when the skeleton's Quillen model is oddly graded
/// and pi_odd(Baut_1 f)_Q = 0, every cell obstruction vanishes for degree
/// reasons and the lift is certified outright. Otherwise each marked cell
/// with map data gets its obstruction evaluated.
LiftScanReport skeletalLiftScan(const FibrationAnalysis& fa, const QuillenData& q,
                                const DglMapData& hX, const DglMapData& hY);

}  // namespace derlie

#endif
