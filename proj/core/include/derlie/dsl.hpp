#ifndef DERLIE_DSL_HPP
#define DERLIE_DSL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "derlie/lie_expr.hpp"
#include "derlie/obstruction.hpp"
#include "derlie/sullivan.hpp"

namespace derlie {

struct Diagnostic {
  std::string file;
  int line = 0;
  int col = 0;
  std::string message;
  std::string hint;  // expected-token hint, may be empty

  std::string format() const;
};

/// A named lifting problem: the relative model, the skeleton's Quillen data,
/// h_X images into Der(total) and the cell image h_Y(u) into Der(base).
struct Problem {
  std::string name;
  std::string relativeName;
  std::string quillenName;
  DglMapData hX;
  DglMapData hY;
};

/// A declared Borel extension, stored unexpanded; the borel command runs
/// the construction and its validation.
struct BorelDecl {
  std::string name;
  std::string modelName;
  int rank = 1;
  std::map<std::string, AlgElement> images;  // over the extended algebra, t's first
};

struct Workspace {
  std::vector<std::string> modelOrder, relativeOrder, quillenOrder, problemOrder, borelOrder;
  std::map<std::string, SullivanModel> models;
  std::map<std::string, RelativeModel> relatives;
  std::map<std::string, QuillenData> quillens;
  std::map<std::string, Problem> problems;
  std::map<std::string, BorelDecl> borels;
  std::set<std::string> derivedModels;  // totals synthesized from relative blocks

  const SullivanModel& model(const std::string& name) const;
  const RelativeModel& relative(const std::string& name) const;
  const QuillenData& quillen(const std::string& name) const;
  const Problem& problem(const std::string& name) const;
  const BorelDecl& borel(const std::string& name) const;
};

struct ParseResult {
  std::optional<Workspace> workspace;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return workspace.has_value(); }
};

/// Parse one source. `file` only labels diagnostics.
ParseResult parseWorkspace(const std::string& source, const std::string& file = "<input>");

/// Parse several sources into one workspace.
ParseResult parseWorkspace(const std::vector<std::pair<std::string, std::string>>& sources);

/// Canonical text form; reparsing yields a structurally identical workspace.
std::string printWorkspace(const Workspace& ws);

bool sameWorkspace(const Workspace& a, const Workspace& b);

}  // namespace derlie

#endif
