#include "derlie/commands.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "derlie/cohomology.hpp"
#include "derlie/cstar.hpp"
#include "derlie/derivation.hpp"
#include "derlie/error.hpp"
#include "derlie/fibration.hpp"
#include "derlie/obstruction.hpp"

namespace derlie {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSignNote =
    "boundary(s) = d.s - (-1)^{|s|} s.d and [s,t] = s.t - (-1)^{|s||t|} t.s; "
    "displayed class representatives are canonical up to a global sign";

struct ReportBuilder {
  Json json;
  std::ostringstream text;

  explicit ReportBuilder(const Invocation& inv) {
    json["schema"] = 1;
    json["command"] = inv.command;
    json["inputs"] = Json::object();
    if (!inv.model.empty()) json["inputs"]["model"] = inv.model;
    if (!inv.relative.empty()) json["inputs"]["relative"] = inv.relative;
    if (!inv.problem.empty()) json["inputs"]["problem"] = inv.problem;
    if (inv.cutoff) json["inputs"]["cutoff"] = *inv.cutoff;
    if (inv.rangeLo) json["inputs"]["range"] = {{"lo", *inv.rangeLo}, {"hi", *inv.rangeHi}};
    json["results"] = Json::object();
    json["witnesses"] = Json::array();
    json["verdicts"] = Json::object();
  }

  CommandResult finish(const Invocation& inv, int exitCode = 0) {
    json["signConventionNote"] = kSignNote;
    CommandResult r;
    r.exitCode = exitCode;
    r.text = text.str();
    if (inv.json) r.json = json.dump(2) + "\n";
    return r;
  }
};

std::pair<int, int> rangeOrDefault(const Invocation& inv, int lo, int hi) {
  if (inv.rangeLo) return {*inv.rangeLo, *inv.rangeHi};
  return {lo, hi};
}

const SullivanModel& pickModel(const Workspace& ws, const Invocation& inv) {
  if (inv.model.empty()) throw Error(errc::UnknownName, "this command needs --model NAME");
  return ws.model(inv.model);
}

const RelativeModel& pickRelative(const Workspace& ws, const Invocation& inv) {
  if (inv.relative.empty()) throw Error(errc::UnknownName, "this command needs --relative NAME");
  return ws.relative(inv.relative);
}

CommandResult cmdValidate(const Workspace& ws, const Invocation& inv) {
  ReportBuilder rb(inv);
  const SullivanModel* m = nullptr;
  if (!inv.model.empty())
    m = &ws.model(inv.model);
  else if (!inv.relative.empty())
    m = &ws.relative(inv.relative).total();
  else
    throw Error(errc::UnknownName, "validate needs --model or --relative");

  ValidationReport vr = m->validate();
  Classification cls = m->classify();
  rb.json["results"]["pass"] = vr.pass;
  rb.json["results"]["minimal"] = vr.minimal;
  rb.json["results"]["issues"] = Json::array();
  for (const ValidationIssue& issue : vr.issues)
    rb.json["results"]["issues"].push_back(
        {{"generator", issue.generator}, {"kind", issue.kind}, {"detail", issue.detail}});
  rb.json["verdicts"]["valid"] = vr.pass;
  rb.json["verdicts"]["minimal"] = vr.minimal;
  rb.json["verdicts"]["pure"] = cls.pure;
  rb.json["verdicts"]["f0_candidate"] = cls.f0Candidate;

  rb.text << "model " << m->name() << ": " << (vr.pass ? "valid" : "INVALID")
          << (vr.minimal ? ", minimal" : ", not minimal") << (cls.pure ? ", pure" : "")
          << (cls.f0Candidate ? ", F0 candidate" : "") << "\n";
  for (const ValidationIssue& issue : vr.issues)
    rb.text << "  [" << issue.kind << "] " << issue.detail << "\n";
  return rb.finish(inv, vr.pass ? 0 : 2);
}

CommandResult cmdBasis(const Workspace& ws, const Invocation& inv) {
  ReportBuilder rb(inv);
  const SullivanModel& m = pickModel(ws, inv);
  int maxDeg = m.algebra().maxGenDegree();
  auto [lo, hi] = rangeOrDefault(inv, 1, maxDeg);

  rb.json["results"]["degrees"] = Json::array();
  rb.text << "Der_n(" << m.name() << ") elementary bases\n";
  for (int n = hi; n >= lo; --n) {
    std::vector<ElemDer> basis = derivationBasis(m, n);
    if (basis.empty()) continue;
    Json row;
    row["degree"] = n;
    row["basis"] = Json::array();
    rb.text << "  " << n << " : ";
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::string s = toString(m, basis[i]);
      row["basis"].push_back(s);
      rb.text << (i ? "  " : "") << s;
    }
    rb.text << "\n";
    rb.json["results"]["degrees"].push_back(std::move(row));
  }
  return rb.finish(inv);
}

CommandResult cmdHomology(const Workspace& ws, const Invocation& inv) {
  ReportBuilder rb(inv);
  const SullivanModel& m = pickModel(ws, inv);
  DerComplex complex(m);
  auto [lo, hi] = rangeOrDefault(inv, 1, complex.maxDegree());

  rb.json["results"]["homology"] = Json::array();
  rb.text << "H_n(Der " << m.name() << ")\n";
  for (int n = hi; n >= lo; --n) {
    HomologySlice h = complex.homology(n);
    Json row;
    row["degree"] = n;
    row["dim"] = h.dim;
    row["classes"] = Json::array();
    rb.text << "  " << n << " : dim " << h.dim;
    for (const RatVec& rep : h.reps) {
      std::string s = toString(m, complex.toDerivation(n, rep));
      row["classes"].push_back(s);
      rb.text << "  [" << s << "]";
    }
    rb.text << "\n";
    rb.json["results"]["homology"].push_back(std::move(row));
  }
  return rb.finish(inv);
}

CommandResult cmdPiAut(const Workspace& ws, const Invocation& inv) {
  ReportBuilder rb(inv);
  const SullivanModel& m = pickModel(ws, inv);
  auto [lo, hi] = rangeOrDefault(inv, 2, m.algebra().maxGenDegree() + 1);
  auto dims = piAutDims(m, lo, hi);

  rb.json["results"]["pi"] = Json::array();
  rb.text << "dim pi_n(Baut_1 " << m.name() << ")_Q\n";
  for (const auto& [n, dim] : dims) {
    rb.json["results"]["pi"].push_back({{"n", n}, {"dim", dim}});
    rb.text << "  n=" << n << " : " << dim << "\n";
  }
  return rb.finish(inv);
}

CommandResult cmdSeparable(const Workspace& ws, const Invocation& inv) {
  ReportBuilder rb(inv);
  const RelativeModel& rm = pickRelative(ws, inv);
  SeparabilityVerdict sep = rm.separability();
  FibrationAnalysis fa(rm);
  ProjectionCheck check = strictProjectionCheck(fa);

  rb.json["verdicts"]["separable"] = sep.separable;
  rb.json["verdicts"]["projection_dgl_map"] = check.pass;
  rb.json["results"]["max_base_degree"] = sep.maxBase;
  if (sep.minFiber) rb.json["results"]["min_fiber_degree"] = *sep.minFiber;
  rb.json["results"]["pairs_checked"] = check.pairsChecked;
  if (sep.witness) {
    rb.json["witnesses"].push_back(
        {{"fiber", sep.witness->first}, {"base", sep.witness->second}});
  }
  rb.json["results"]["violations"] = check.violations;

  rb.text << rm.name() << ": " << (sep.separable ? "pi_Q-separable" : "NOT pi_Q-separable");
  if (sep.witness)
    rb.text << "  witness (" << sep.witness->first << ", " << sep.witness->second << ")";
  rb.text << "\n"
          << "b_f strict projection check: " << (check.pass ? "pass" : "FAIL") << "\n";
  for (const std::string& v : check.violations) rb.text << "  " << v << "\n";
  return rb.finish(inv, sep.separable ? 0 : 2);
}

CommandResult cmdDelta(const Workspace& ws, const Invocation& inv) {
  ReportBuilder rb(inv);
  const RelativeModel& rm = pickRelative(ws, inv);
  FibrationAnalysis fa(rm);
  const DerComplex& base = fa.baseComplex();
  auto [lo, hi] = rangeOrDefault(inv, 2, base.maxDegree());

  rb.json["results"]["delta"] = Json::array();
  rb.text << "delta_f on H_*(Der " << rm.base().name() << ")\n";
  std::size_t excluded = base.homology(1).dim;
  for (int n = std::max(lo, 2); n <= hi; ++n) {
    HomologySlice h = base.homology(n);
    for (const RatVec& rep : h.reps) {
      Derivation sigma = base.toDerivation(n, rep);
      DeltaImage img = connectingDelta(fa, sigma);
      Json row;
      row["degree"] = n;
      row["class"] = toString(rm.base(), sigma);
      row["image"] = toString(rm.total(), img.tau);
      row["zero"] = img.zeroClass;
      rb.json["results"]["delta"].push_back(std::move(row));
      rb.text << "  delta[" << toString(rm.base(), sigma) << "] = ["
              << toString(rm.total(), img.tau) << "]"
              << (img.zeroClass ? " = 0" : " != 0") << "\n";
    }
  }
  rb.json["results"]["excluded_degree_one_classes"] = excluded;
  if (excluded)
    rb.text << "  (" << excluded
            << " degree-1 base class(es) excluded: images land in shift 0)\n";
  return rb.finish(inv);
}

CommandResult cmdSection(const Workspace& ws, const Invocation& inv) {
  ReportBuilder rb(inv);
  const RelativeModel& rm = pickRelative(ws, inv);
  FibrationAnalysis fa(rm);
  SectionVerdict verdict = sectionExists(fa);

  rb.json["verdicts"]["section_exists"] = verdict.exists;
  rb.json["results"]["scan_bound"] = verdict.scanBound;
  rb.json["results"]["excluded_degree_one_classes"] = verdict.excludedDegreeOneClasses;
  rb.text << "a_f for " << rm.name() << ": "
          << (verdict.exists ? "admits a section (delta_f = 0)"
                             : "does NOT admit a section (delta_f != 0)")
          << "\n";
  if (!verdict.exists) {
    rb.json["witnesses"].push_back(
        {{"degree", *verdict.failingDegree},
         {"class", toString(rm.base(), *verdict.failingBaseClass)},
         {"delta_image", toString(rm.total(), *verdict.failingDeltaImage)}});
    rb.text << "  failing class in degree " << *verdict.failingDegree << ": ["
            << toString(rm.base(), *verdict.failingBaseClass) << "] -> ["
            << toString(rm.total(), *verdict.failingDeltaImage) << "]\n";
  }
  if (verdict.excludedDegreeOneClasses)
    rb.text << "  (" << verdict.excludedDegreeOneClasses
            << " degree-1 base class(es) excluded from the scan)\n";
  return rb.finish(inv);
}

CommandResult cmdRelHomology(const Workspace& ws, const Invocation& inv) {
  ReportBuilder rb(inv);
  const RelativeModel& rm = pickRelative(ws, inv);
  FibrationAnalysis fa(rm);
  const DerComplex& fiber = fa.fiberComplex();
  auto [lo, hi] = rangeOrDefault(inv, 1, fiber.maxDegree());

  rb.json["results"]["homology"] = Json::array();
  rb.text << "H_n(Der(Lambda W, Lambda V (x) Lambda W)) = pi_{n+1}(Baut_1 f)_Q for "
          << rm.name() << "\n";
  for (int n = hi; n >= lo; --n) {
    HomologySlice h = relDerHomology(fa, n);
    Json row;
    row["degree"] = n;
    row["dim"] = h.dim;
    row["classes"] = Json::array();
    rb.text << "  n=" << n << " : dim " << h.dim;
    for (const RatVec& rep : h.reps) {
      std::string s = toString(rm.total(), fiber.toDerivation(n, rep));
      row["classes"].push_back(s);
      rb.text << "  [" << s << "]";
    }
    rb.text << "\n";
    rb.json["results"]["homology"].push_back(std::move(row));
  }
  return rb.finish(inv);
}

CommandResult cmdFiberDims(const Workspace& ws, const Invocation& inv) {
  ReportBuilder rb(inv);
  const RelativeModel& rm = pickRelative(ws, inv);
  FibrationAnalysis fa(rm);
  int maxShift = 0;
  for (std::size_t i = rm.baseCount(); i < rm.total().genCount(); ++i)
    maxShift = std::max(maxShift, rm.total().algebra().gen(i).degree);
  auto [lo, hi] = rangeOrDefault(inv, 1, std::max(1, maxShift));
  int cutoff = inv.cutoff ? *inv.cutoff : std::max(0, maxShift - lo);

  rb.json["results"]["dims"] = Json::array();
  rb.text << "dim L(F_{a_f})_n = sum dim Der_i(Lambda W) * dim H^j(Lambda V), i-j=n\n";
  for (int n = lo; n <= hi; ++n) {
    std::size_t dim = fiberDimsFormula(fa, n, cutoff);
    rb.json["results"]["dims"].push_back({{"n", n}, {"dim", dim}});
    rb.text << "  n=" << n << " : " << dim << "\n";
  }
  return rb.finish(inv);
}

CommandResult cmdPiOdd(const Workspace& ws, const Invocation& inv) {
  ReportBuilder rb(inv);
  const RelativeModel& rm = pickRelative(ws, inv);
  FibrationAnalysis fa(rm);
  PiOddVerdict verdict = piOddVanishing(fa);

  rb.json["verdicts"]["pi_odd_vanishes"] = verdict.vanishes;
  rb.json["results"]["scan_bound"] = verdict.scanBound;
  for (const auto& [degree, witness] : verdict.witnesses)
    rb.json["witnesses"].push_back(
        {{"degree", degree}, {"class", toString(rm.total(), witness)}});

  if (verdict.vanishes) {
    rb.text << "pi_odd(Baut_1 " << rm.name() << ")_Q = 0: certified"
            << " (even fiber homology vanishes through degree " << verdict.scanBound << ")\n"
            << "r0(Y) <= r0(X) hypothesis satisfied\n";
  } else {
    rb.text << "pi_odd(Baut_1 " << rm.name() << ")_Q != 0\n";
    for (const auto& [degree, witness] : verdict.witnesses)
      rb.text << "  H_" << degree << " witness [" << toString(rm.total(), witness) << "]\n";
  }
  return rb.finish(inv);
}

CommandResult cmdHalperin(const Workspace& ws, const Invocation& inv) {
  ReportBuilder rb(inv);
  const SullivanModel& m = pickModel(ws, inv);
  F0Verdict f0 = f0Certify(m);
  rb.json["verdicts"]["f0"] = f0.isF0;
  rb.json["results"]["socle_bound"] = f0.socleBound;
  rb.json["results"]["odd_cohomology_vanishes"] = f0.oddCohomologyVanishes;
  rb.json["results"]["finiteness_evidence"] = f0.finitenessEvidence;

  rb.text << m.name() << ": " << (f0.isF0 ? "F0 certified" : "not F0");
  if (!f0.detail.empty()) rb.text << " (" << f0.detail << ")";
  rb.text << "; socle bound " << f0.socleBound << "\n";
  if (!f0.isF0) return rb.finish(inv, 2);

  HalperinVerdict hv = halperinTest(m);
  rb.json["verdicts"]["halperin"] = hv.holds;
  rb.json["results"]["max_negative_degree_scanned"] = hv.maxKScanned;
  rb.json["results"]["note"] = hv.note;
  if (hv.witness) {
    Json images = Json::array();
    FiniteGradedRing ring = f0Ring(m);
    for (std::size_t g = 0; g < ring.ambient().genCount(); ++g)
      images.push_back({{"gen", ring.ambient().gen(g).name},
                        {"image", ring.ambient().toString(hv.witness->genImages[g])}});
    rb.json["witnesses"].push_back({{"k", hv.witness->k}, {"images", images}});
  }
  rb.text << "Halperin test: " << (hv.holds ? "holds" : "FAILS") << " -- " << hv.note << "\n";
  return rb.finish(inv);
}

CommandResult cmdCstar(const Workspace& ws, const Invocation& inv) {
  ReportBuilder rb(inv);
  const SullivanModel& m = pickModel(ws, inv);
  if (!inv.cutoff) throw Error(errc::CutoffTooSmall, "cstar needs --cutoff N");
  int cutoff = *inv.cutoff;

  TruncatedDgl L = inv.homology ? homologyDgl(m, cutoff) : truncateDerDgl(m, cutoff);
  CStarResult cs = cstarModel(L, cutoff);

  rb.json["results"]["source"] = inv.homology ? "H(Der)" : "Der";
  rb.json["results"]["cutoff"] = cutoff;
  rb.json["results"]["generators"] = Json::array();
  const GradedAlgebra& alg = cs.cdga.algebra();
  for (std::size_t i = 0; i < alg.genCount(); ++i)
    rb.json["results"]["generators"].push_back(
        {{"name", alg.gen(i).name},
         {"degree", alg.gen(i).degree},
         {"D", alg.toString(cs.cdga.diffOf(i))}});
  rb.json["results"]["truncated"] = cs.truncatedGens;

  rb.text << "C*(" << (inv.homology ? "H(Der " : "Der ") << m.name()
          << (inv.homology ? ")" : "") << ", cutoff " << cutoff << ")\n";
  for (std::size_t i = 0; i < alg.genCount(); ++i) {
    rb.text << "  " << alg.gen(i).name << "  degree " << alg.gen(i).degree;
    if (!cs.cdga.diffOf(i).isZero())
      rb.text << "  D = " << alg.toString(cs.cdga.diffOf(i));
    rb.text << "\n";
  }
  if (!cs.truncatedGens.empty()) {
    rb.text << "  (images truncated past the cutoff for:";
    for (const std::string& g : cs.truncatedGens) rb.text << " " << g;
    rb.text << ")\n";
  }
  return rb.finish(inv);
}

CommandResult cmdBorel(const Workspace& ws, const Invocation& inv) {
  ReportBuilder rb(inv);
  if (inv.relative.empty())
    throw Error(errc::UnknownName, "borel needs --relative NAME (the borel declaration)");
  const BorelDecl& decl = ws.borel(inv.relative);
  const SullivanModel& m = ws.model(decl.modelName);
  int cutoff = inv.cutoff ? *inv.cutoff : 2 * (m.algebra().maxGenDegree() + 2);

  BorelResult result = borelExtend(m, decl.rank, decl.images, cutoff);
  rb.json["results"]["rank"] = decl.rank;
  rb.json["results"]["cutoff"] = cutoff;
  rb.json["results"]["dims"] = Json::array();
  for (int n = 0; n <= cutoff; ++n)
    rb.json["results"]["dims"].push_back(result.cohomology.dim(n));
  rb.json["results"]["tail_window"] = result.tailWindow;
  rb.json["verdicts"]["tail_vanishes"] = result.tailVanishes;

  rb.text << "Borel extension " << decl.name << " of " << decl.modelName << " (rank "
          << decl.rank << ")\n  H^n dims up to " << cutoff << ":";
  for (int n = 0; n <= cutoff; ++n) rb.text << " " << result.cohomology.dim(n);
  rb.text << "\n  "
          << (result.tailVanishes
                  ? "cohomology vanishes on the trailing window (bounded-degree evidence of "
                    "finiteness; not a proof)"
                  : "cohomology persists up to the cutoff (growth not excluded)")
          << "\n";
  return rb.finish(inv);
}

CommandResult cmdObstruct(const Workspace& ws, const Invocation& inv) {
  ReportBuilder rb(inv);
  if (inv.problem.empty()) throw Error(errc::UnknownName, "obstruct needs --problem NAME");
  const Problem& p = ws.problem(inv.problem);
  if (!inv.relative.empty() && inv.relative != p.relativeName)
    throw Error(errc::UnknownName,
                "--relative disagrees with the problem's relative model " + p.relativeName);
  const RelativeModel& rm = ws.relative(p.relativeName);
  const QuillenData& q = ws.quillen(p.quillenName);
  FibrationAnalysis fa(rm);

  MapCheckReport mapCheck = dglMapCheck(q, p.hX, rm.total());
  rb.json["results"]["hX_dgl_map"] = mapCheck.pass;
  if (!mapCheck.pass) {
    for (const MapCheckViolation& v : mapCheck.violations) {
      rb.json["witnesses"].push_back({{"generator", v.generator}, {"detail", v.detail}});
      rb.text << "hX violation on " << v.generator << ": " << v.detail << "\n";
    }
    rb.text << "h_X is not a DGL map on L(B); obstruction undefined\n";
    return rb.finish(inv, 2);
  }

  if (q.cell() && p.hY.find(*q.cell())) {
    const std::string& u = *q.cell();
    int N = q.genDegree(u) + 1;
    ObstructionReport report = obstructionClass(fa, p.hX, q.diffOf(u), *p.hY.find(u), N);

    rb.json["results"]["cell"] = u;
    rb.json["results"]["attach_degree"] = N;
    rb.json["results"]["class_degree"] = report.classDegree;
    rb.json["results"]["class"] = toString(rm.total(), report.obstruction);
    rb.json["verdicts"]["obstruction_zero"] = report.zeroClass;
    rb.json["verdicts"]["lift_exists"] = report.zeroClass;
    rb.text << "obstruction class for cell " << u << " (N=" << N << ") : ["
            << toString(rm.total(), report.obstruction) << "] "
            << (report.zeroClass ? "ZERO; lift exists" : "NONZERO; no lift") << "\n";
    if (report.lift) {
      rb.json["results"]["lift_q"] = toString(rm.total(), *report.lift);
      rb.text << "  constructive lift: h(u) = h_Y(u) - q with q = "
              << toString(rm.total(), *report.lift) << "\n";
    }
    return rb.finish(inv);
  }

  LiftScanReport scan = skeletalLiftScan(fa, q, p.hX, p.hY);
  rb.json["results"]["oddly_graded_skeleton"] = scan.oddlyGraded;
  rb.json["verdicts"]["pi_odd_vanishes"] = scan.piOdd.vanishes;
  rb.json["verdicts"]["lift_certified"] = scan.certified;
  for (const auto& [degree, witness] : scan.piOdd.witnesses)
    rb.json["witnesses"].push_back(
        {{"degree", degree}, {"class", toString(rm.total(), witness)}});
  Json cells = Json::array();
  for (const CellScanEntry& entry : scan.cells)
    cells.push_back({{"cell", entry.cell}, {"N", entry.attachDegree}, {"status", entry.status}});
  rb.json["results"]["cells"] = std::move(cells);

  rb.text << "lift scan for " << p.name << ": skeleton "
          << (scan.oddlyGraded ? "oddly graded" : "not oddly graded") << ", pi_odd "
          << (scan.piOdd.vanishes ? "= 0" : "!= 0") << "\n";
  rb.text << (scan.certified
                  ? "lift certified for all cells (obstructions vanish for degree reasons)\n"
                  : "lift not certified; obstruction classes may be nonzero\n");
  for (const auto& [degree, witness] : scan.piOdd.witnesses)
    rb.text << "  blocking class in H_" << degree << ": [" << toString(rm.total(), witness)
            << "]\n";
  for (const CellScanEntry& entry : scan.cells)
    rb.text << "  cell " << entry.cell << " (N=" << entry.attachDegree
            << "): " << entry.status << "\n";
  return rb.finish(inv);
}

bool isPreconditionCode(const std::string& code) {
  return code != errc::UnknownName && code != errc::BadRange;
}

}  // namespace

CommandResult runCommand(const Workspace& ws, const Invocation& inv) {
  try {
    if (inv.command == "validate") return cmdValidate(ws, inv);
    if (inv.command == "basis") return cmdBasis(ws, inv);
    if (inv.command == "homology") return cmdHomology(ws, inv);
    if (inv.command == "pi-aut") return cmdPiAut(ws, inv);
    if (inv.command == "separable") return cmdSeparable(ws, inv);
    if (inv.command == "delta") return cmdDelta(ws, inv);
    if (inv.command == "section") return cmdSection(ws, inv);
    if (inv.command == "rel-homology") return cmdRelHomology(ws, inv);
    if (inv.command == "fiber-dims") return cmdFiberDims(ws, inv);
    if (inv.command == "pi-odd") return cmdPiOdd(ws, inv);
    if (inv.command == "halperin") return cmdHalperin(ws, inv);
    if (inv.command == "cstar") return cmdCstar(ws, inv);
    if (inv.command == "borel") return cmdBorel(ws, inv);
    if (inv.command == "obstruct") return cmdObstruct(ws, inv);
    CommandResult r;
    r.exitCode = 1;
    r.text = "unknown command '" + inv.command + "'\n";
    return r;
  } catch (const Error& err) {
    CommandResult r;
    r.exitCode = isPreconditionCode(err.code()) ? 2 : 1;
    r.text = std::string(err.what()) + "\n";
    if (inv.json) {
      Json j;
      j["schema"] = 1;
      j["command"] = inv.command;
      j["error"] = {{"code", err.code()}, {"message", err.what()}};
      r.json = j.dump(2) + "\n";
    }
    return r;
  }
}

}  // namespace derlie
