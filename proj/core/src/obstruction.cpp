#include "derlie/obstruction.hpp"

#include "derlie/error.hpp"

namespace derlie {

namespace {

/// nullopt plays the role of an untyped zero while folding the tree.
std::optional<Derivation> evalNode(const SullivanModel& target, const DglMapData& map,
                                   const LieExpr::NodePtr& n) {
  using Kind = LieExpr::Node::Kind;
  switch (n->kind) {
    case Kind::Gen: {
      const Derivation* img = map.find(n->gen);
      if (!img) throw Error(errc::UnmappedGenerator, "no image for generator " + n->gen);
      if (img->isZero()) return std::nullopt;
      return *img;
    }
    case Kind::Bracket: {
      auto l = evalNode(target, map, n->left);
      auto r = evalNode(target, map, n->right);
      if (!l || !r) return std::nullopt;
      Derivation br = derBracket(target, *l, *r);
      if (br.isZero()) return std::nullopt;
      return br;
    }
    case Kind::Scale: {
      auto inner = evalNode(target, map, n->inner);
      if (!inner || isZero(n->scalar)) return std::nullopt;
      return n->scalar * *inner;
    }
    case Kind::Sum: {
      std::optional<Derivation> acc;
      for (const auto& s : n->summands) {
        auto part = evalNode(target, map, s);
        if (!part) continue;
        if (!acc)
          acc = std::move(part);
        else {
          if (acc->shift != part->shift)
            throw Error(errc::InhomogeneousImage, "sum of maps with different shifts");
          acc = *acc + *part;
        }
      }
      if (acc && acc->isZero()) return std::nullopt;
      return acc;
    }
  }
  return std::nullopt;
}

}  // namespace

Derivation lieEval(const SullivanModel& target, const DglMapData& map, const LieExpr& e,
                   int zeroShift) {
  if (e.isZero()) return zeroDerivation(target, zeroShift);
  auto result = evalNode(target, map, e.root());
  if (!result) return zeroDerivation(target, zeroShift);
  return *result;
}

MapCheckReport dglMapCheck(const QuillenData& q, const DglMapData& map,
                           const SullivanModel& target) {
  MapCheckReport report;
  for (std::size_t i = 0; i < q.genCount(); ++i) {
    const auto& [name, degree] = q.gen(i);
    const Derivation* img = map.find(name);
    if (!img) {
      if (q.cell() && *q.cell() == name) continue;  // the cell is mapped separately
      report.pass = false;
      report.violations.push_back({name, "no image provided"});
      continue;
    }
    if (!img->isZero() && img->shift != degree) {
      report.pass = false;
      report.violations.push_back(
          {name, "image shift " + std::to_string(img->shift) + " does not preserve degree " +
                     std::to_string(degree)});
      continue;
    }
    Derivation lhs = derBoundary(target, *img);
    Derivation rhs = lieEval(target, map, q.diffOf(name), degree - 1);
    lhs.shift = rhs.shift = degree - 1;  // align shifts of zero derivations
    if (!(lhs == rhs)) {
      report.pass = false;
      report.violations.push_back({name, "del(h(" + name + ")) != h(del(" + name + "))"});
    }
  }
  return report;
}

ObstructionReport obstructionClass(const FibrationAnalysis& fa, const DglMapData& hX,
                                   const LieExpr& delAlphaU, const Derivation& hYu, int N) {
  const RelativeModel& rm = fa.relative();
  if (!rm.separability().separable)
    throw Error(errc::NotSeparable, rm.name() + ": the obstruction needs a separable model");
  if (N < 3)
    throw Error(errc::BadRange, "the obstruction class lives in degree N-2 >= 1");
  if (!hYu.isZero() && hYu.shift != N - 1)
    throw Error(errc::DimensionMismatch, "h_Y(u) must be a derivation of shift N-1");

  const SullivanModel& total = rm.total();
  const SullivanModel& base = rm.base();

  Derivation evaluated = lieEval(total, hX, delAlphaU, N - 2);
  if (!evaluated.isZero() && evaluated.shift != N - 2)
    throw Error(errc::DimensionMismatch,
                "h_X(del_alpha(u)) has shift " + std::to_string(evaluated.shift) +
                    ", expected N-2 = " + std::to_string(N - 2));
  auto [evalBase, evalFiber] = fa.split(evaluated);

  // commutativity b_f o h_X = h_Y o i on the cell boundary:
  // del_Y(h_Y(u)) must equal the base component of h_X(del_alpha(u)).
  Derivation hYuShifted = hYu;
  hYuShifted.shift = N - 1;
  Derivation lhs = derBoundary(base, hYuShifted);
  Derivation rhs = zeroDerivation(base, N - 2);
  for (std::size_t i = 0; i < rm.baseCount(); ++i)
    rhs.images[i] = rm.restrictToBase(rm.projV(evalBase.images[i]));
  if (!(lhs == rhs))
    throw Error(errc::CommutativityFailure,
                "del_Y(h_Y(u)) differs from the base part of h_X(del_alpha(u))");

  // tau(h_Y(u)): fiber component of del_X applied to the zero-extension.
  Derivation extended = fa.zeroExtend(hYuShifted);
  auto [bndBase, bndFiber] = fa.split(derBoundary(total, extended));

  ObstructionReport report;
  report.classDegree = N - 2;
  report.tauPart = std::move(bndFiber);
  report.evalPart = std::move(evalFiber);
  report.obstruction = report.tauPart - report.evalPart;
  report.obstruction.shift = N - 2;

  if (!derBoundary(total, report.obstruction).isZero())
    throw Error(errc::NotACycle,
                "tau(h_Y(u)) - h''_X(del_alpha(u)) failed the cycle assertion; "
                "the input maps are not a consistent lifting problem");

  const DerComplex& fiber = fa.fiberComplex();
  auto coords = fiber.coordinates(N - 2, report.obstruction);
  if (!coords) throw Error(errc::DimensionMismatch, "obstruction outside the fiber slice");
  report.coords = std::move(*coords);
  report.zeroClass = fiber.isBoundary(N - 2, report.coords);

  if (report.zeroClass) {
    // constructive lift: q with del_X(q) = obstruction, from the boundary span
    std::vector<RatVec> span = fiber.boundarySpan(N - 2);
    auto combo = inSpan(span, report.coords);
    if (!combo) throw Error(errc::NotACycle, "zero class without a preimage");
    Derivation q = zeroDerivation(total, N - 1);
    const auto& basisAbove = fiber.basis(N - 1);
    for (std::size_t i = 0; i < basisAbove.size(); ++i) {
      if (isZero((*combo)[i])) continue;
      q = q + elementary(total, basisAbove[i], (*combo)[i]);
    }
    report.lift = std::move(q);
  }
  return report;
}

LiftScanReport skeletalLiftScan(const FibrationAnalysis& fa, const QuillenData& q,
                                const DglMapData& hX, const DglMapData& hY) {
  LiftScanReport report;
  report.oddlyGraded = q.oddlyGraded();
  report.piOdd = piOddVanishing(fa);
  report.certified = report.oddlyGraded && report.piOdd.vanishes;

  if (q.cell()) {
    CellScanEntry entry;
    entry.cell = *q.cell();
    entry.attachDegree = q.genDegree(*q.cell()) + 1;
    if (report.certified) {
      entry.status = "certified";
    } else {
      const Derivation* hYu = hY.find(*q.cell());
      if (!hYu) {
        entry.status = "skipped: no h_Y image for the cell";
      } else {
        try {
          entry.report =
              obstructionClass(fa, hX, q.diffOf(*q.cell()), *hYu, entry.attachDegree);
          entry.status = entry.report->zeroClass ? "zero" : "nonzero";
        } catch (const Error& err) {
          entry.status = std::string("skipped: ") + err.what();
        }
      }
    }
    report.cells.push_back(std::move(entry));
  }
  return report;
}

}  // namespace derlie
