#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "derlie/commands.hpp"
#include "derlie/dsl.hpp"

namespace {

int runOne(const std::vector<std::string>& files, derlie::Invocation inv,
           const std::string& range) {
  if (!range.empty()) {
    auto dots = range.find("..");
    try {
      if (dots == std::string::npos) {
        inv.rangeLo = inv.rangeHi = std::stoi(range);
      } else {
        inv.rangeLo = std::stoi(range.substr(0, dots));
        inv.rangeHi = std::stoi(range.substr(dots + 2));
      }
    } catch (const std::exception&) {
      std::cerr << "bad --range '" << range << "', expected a..b\n";
      return 1;
    }
    if (*inv.rangeLo > *inv.rangeHi) {
      std::cerr << "bad --range '" << range << "': lo > hi\n";
      return 1;
    }
  }

  std::vector<std::pair<std::string, std::string>> sources;
  for (const std::string& file : files) {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "cannot open " << file << "\n";
      return 1;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    sources.emplace_back(file, buf.str());
  }

  derlie::ParseResult parsed = derlie::parseWorkspace(sources);
  if (!parsed.ok()) {
    for (const derlie::Diagnostic& d : parsed.diagnostics) std::cerr << d.format() << "\n";
    return 1;
  }

  derlie::CommandResult result = derlie::runCommand(*parsed.workspace, inv);
  if (inv.json)
    std::cout << result.json;
  else
    std::cout << result.text;
  if (result.exitCode != 0 && !inv.json) std::cerr.flush();
  return result.exitCode;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"derlie: exact-arithmetic workbench for derivation Lie algebras of Sullivan "
               "models and rationalized classifying spaces"};
  app.require_subcommand(1);

  static const std::vector<std::string> commands = {
      "validate", "basis",      "homology",   "pi-aut",  "separable",
      "delta",    "section",    "rel-homology", "fiber-dims", "pi-odd",
      "halperin", "cstar",      "borel",      "obstruct"};

  int exitCode = 0;
  for (const std::string& name : commands) {
    CLI::App* sub = app.add_subcommand(name, "");
    auto files = std::make_shared<std::vector<std::string>>();
    auto inv = std::make_shared<derlie::Invocation>();
    auto range = std::make_shared<std::string>();
    inv->command = name;
    sub->add_option("files", *files, "model definition files")->required()->check(CLI::ExistingFile);
    sub->add_option("--model", inv->model, "model name");
    sub->add_option("--relative", inv->relative, "relative model (or borel declaration) name");
    sub->add_option("--problem", inv->problem, "lifting problem name");
    sub->add_option("--range", *range, "degree range a..b");
    sub->add_option("--cutoff", [inv](const std::vector<std::string>& vals) {
      inv->cutoff = std::stoi(vals.front());
      return true;
    }, "degree cutoff");
    sub->add_flag("--json", inv->json, "emit the JSON report");
    if (name == "cstar")
      sub->add_flag("--homology", inv->homology, "build C* of H(Der) instead of Der");
    sub->callback([files, inv, range, &exitCode] { exitCode = runOne(*files, *inv, *range); });
  }

  CLI11_PARSE(app, argc, argv);
  return exitCode;
}
