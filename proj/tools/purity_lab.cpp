// purity-lab: command-line front end for workspaces and named suites.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "puritylab/constructions.hpp"
#include "puritylab/corpus.hpp"
#include "puritylab/error.hpp"
#include "puritylab/suites.hpp"
#include "puritylab/workspace.hpp"

using namespace puritylab;

namespace {

constexpr int kUsageError = 3;

struct CommonFlags {
  SettingsOverride flags;
  std::string reportPath;
  bool json = false;
  bool timing = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--threads", flags.threads, "worker threads (0 = all cores)");
    cmd->add_option("--budget", flags.budget, "generator tuples per enumeration");
    cmd->add_option("--up-to", flags.upTo, "bound N used for UP_TO(N)");
    cmd->add_option("--seed", flags.seed, "seed for sampled checks");
    cmd->add_option("--end-budget", flags.endBudget, "endomorphisms enumerated before sampling");
    cmd->add_flag("--oracle", flags.oracle, "also run the independent route of each check");
    cmd->add_option("--report", reportPath, "write the canonical JSON report here");
    cmd->add_flag("--json", json, "print the canonical JSON report");
    cmd->add_flag("--timing", timing, "print per-claim timing");
  }

  RunSettings resolve(RunSettings base) const {
    environmentOverride().applyTo(base);
    flags.applyTo(base);
    return base;
  }
};

int finish(const SuiteResult& result, const CommonFlags& common) {
  if (!common.reportPath.empty()) emitReport(result, common.reportPath);
  if (common.json) {
    std::cout << canonicalReport(result);
  } else {
    for (const auto& c : result.claims) {
      std::cout << verdictName(c.verdict) << "  " << c.id << "  " << c.anchor;
      if (common.timing) std::cout << "  (" << c.elapsedSeconds << " s)";
      std::cout << "\n";
    }
    std::cout << result.name << ": " << verdictName(result.verdict()) << "\n";
  }
  return exitCode(result.verdict());
}

/// "squareZero(2,2)" -> ring block lines.
std::string ringBlock(const std::string& name, const std::string& spec) {
  (void)parseNamedAlgebra(spec);
  const auto open = spec.find('('), close = spec.rfind(')');
  const std::string family = spec.substr(0, open);
  std::vector<std::string> args;
  std::stringstream in(spec.substr(open + 1, close - open - 1));
  for (std::string a; std::getline(in, a, ',');) args.push_back(a);
  std::ostringstream out;
  out << "[ring." << name << "]\nfamily = \"" << family << "\"\nq = " << args.at(0) << "\n";
  if (family == "squareZero") out << "t = " << args.at(1) << "\n";
  if (family == "chain") out << "e = " << args.at(1) << "\n";
  if (family == "truncated") {
    out << "exponents = [";
    for (std::size_t i = 1; i < args.size(); ++i) out << (i > 1 ? ", " : "") << args[i];
    out << "]\n";
  }
  return out.str();
}

std::string presentationBlock(const std::string& name, const std::string& ring, const Algebra& r, std::size_t rank,
                              const RelationMatrix& rel) {
  std::ostringstream out;
  out << "[module." << name << "]\nring = \"" << ring << "\"\npresentation = { rank = " << rank << ", relations = [";
  for (std::size_t j = 0; j < rel.cols(); ++j) {
    out << (j ? ", " : "") << "[";
    for (std::size_t i = 0; i < rel.rows(); ++i) out << (i ? ", " : "") << '"' << r.format(rel.at(i, j)) << '"';
    out << "]";
  }
  out << "] }\n";
  return out.str();
}

std::string actionsBlock(const std::string& name, const std::string& ring, const Module& m) {
  std::ostringstream out;
  out << "[module." << name << "]\nring = \"" << ring << "\"\nactions = [\n";
  for (std::size_t k = 0; k < m.actions().size(); ++k) {
    const auto& a = m.action(k);
    out << "  [";
    for (std::size_t i = 0; i < a.rows(); ++i) {
      out << (i ? ", " : "") << "[";
      for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? ", " : "") << a(i, j);
      out << "]";
    }
    out << "],\n";
  }
  out << "]\n";
  return out.str();
}

std::string ringNameOf(const Workspace& ws, const Module& m) {
  for (const auto& [name, r] : ws.rings)
    if (sameRing(*r, m.ring())) return name;
  return "R";
}

Json readJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Purity, flatness and injectivity over finite local algebras"};
  app.require_subcommand(1);
  int code = 0;

  CommonFlags runFlags;
  std::string workspacePath;
  auto* run = app.add_subcommand("run", "run the checks of a workspace file");
  run->add_option("workspace", workspacePath, "workspace file")->required();
  runFlags.attach(run);
  run->callback([&] {
    const auto ws = loadWorkspace(workspacePath);
    const auto settings = runFlags.resolve(ws.settings);
    code = finish(runWorkspace(ws, settings), runFlags);
  });

  CommonFlags suiteFlags;
  std::string suiteName;
  auto* suite = app.add_subcommand("suite", "run a named verification suite");
  suite->add_option("name", suiteName, "suite name (see `list suites`)")->required();
  suiteFlags.attach(suite);
  suite->callback([&] { code = finish(runSuite(suiteName, suiteFlags.resolve({})), suiteFlags); });

  auto* list = app.add_subcommand("list", "list available items");
  std::string what;
  list->add_option("what", what, "suites or checks")->required()->check(CLI::IsMember({"suites", "checks"}));
  list->callback([&] {
    if (what == "suites") {
      for (const auto& n : suiteNames()) std::cout << n << "  " << suiteSummary(n) << "\n";
    } else {
      for (const auto& [k, target] : queryKinds())
        std::cout << k << "  "
                  << (target == TargetKind::Module ? "module" : target == TargetKind::Inclusion ? "inclusion" : "ring")
                  << "\n";
    }
  });

  auto* construct = app.add_subcommand("construct", "print workspace blocks for constructed modules");
  construct->require_subcommand(1);
  std::string ringSpec = "squareZero(2,2)", moduleName;
  std::size_t p = 1, n = 1, m = 2;
  std::vector<std::string> gens;
  auto* warfield = construct->add_subcommand("warfield", "staircase module W(p,n,m)");
  warfield->add_option("--ring", ringSpec, "named ring, e.g. squareZero(2,2)");
  warfield->add_option("--p", p)->required();
  warfield->add_option("--n", n)->required();
  warfield->add_option("--m", m)->required();
  warfield->add_option("--gens", gens, "ideal generators a_1 .. a_(p+1)")->delimiter(',');
  warfield->add_option("--name", moduleName, "module name")->default_val("W");
  warfield->callback([&] {
    const auto r = parseNamedAlgebra(ringSpec);
    StaircaseSpec spec{p, n, m, {}};
    for (const auto& g : gens) spec.idealGens.push_back(r->parseElement(g));
    if (spec.idealGens.empty()) spec.idealGens = radicalGenerators(*r, p + 1);
    (void)warfieldModule(r, spec);
    std::cout << ringBlock("R", ringSpec) << "\n"
              << presentationBlock(moduleName, "R", *r, n, staircaseRelations(*r, spec));
  });

  std::string dualWorkspace, dualModule, dualName;
  bool linear = false;
  auto* dual = construct->add_subcommand("dual", "Auslander-Bridger or linear dual of a workspace module");
  dual->add_option("workspace", dualWorkspace)->required();
  dual->add_option("module", dualModule)->required();
  dual->add_flag("--linear", linear, "linear dual over the base field instead");
  dual->add_option("--name", dualName, "name of the new module");
  dual->callback([&] {
    const auto ws = loadWorkspace(dualWorkspace);
    const Module& src = ws.module(dualModule);
    const std::string ring = ringNameOf(ws, src);
    const std::string name = dualName.empty() ? (linear ? dualModule + "_star" : "D_" + dualModule) : dualName;
    if (linear) {
      std::cout << actionsBlock(name, ring, fqDual(src));
      return;
    }
    const Module d = auslanderBridgerDual(src);
    const auto mp = minimalPresentation(d);
    std::cout << presentationBlock(name, ring, d.ring(), mp.profile.gen, mp.relations);
  });

  CommonFlags checkFlags;
  std::string checkKind, checkWorkspace, checkTarget, nText = "1", mText = "1";
  auto* check = app.add_subcommand("check", "run a single check against a workspace object");
  check->add_option("kind", checkKind, "purity, flat, injective, end-local, fitting, free, ...")->required();
  check->add_option("workspace", checkWorkspace)->required();
  check->add_option("target", checkTarget, "module, inclusion or ring name")->required();
  check->add_option("--n", nText, "integer or inf");
  check->add_option("--m", mText, "integer or inf");
  checkFlags.attach(check);
  check->callback([&] {
    auto ws = loadWorkspace(checkWorkspace);
    ws.queries = {singleQuery(ws, checkKind, checkTarget, parseBound(nText), parseBound(mText))};
    code = finish(runWorkspace(ws, checkFlags.resolve(ws.settings)), checkFlags);
  });

  std::string replayWorkspace, replayReport;
  auto* replay = app.add_subcommand("replay", "re-verify the witnesses of a workspace report");
  replay->add_option("workspace", replayWorkspace)->required();
  replay->add_option("report", replayReport)->required();
  replay->callback([&] {
    const auto ws = loadWorkspace(replayWorkspace);
    const Json report = readJson(replayReport);
    std::size_t replayed = 0, broken = 0;
    for (const auto& claim : report.at("claims")) {
      if (claim.at("witness").is_null()) continue;
      const bool ok = replayClaim(ws, claim);
      ++replayed;
      if (!ok) ++broken;
      std::cout << (ok ? "reproduced  " : "NOT reproduced  ") << claim.at("id").get<std::string>() << "\n";
    }
    std::cout << replayed << " witnesses, " << broken << " not reproduced\n";
    code = broken ? 1 : 0;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return e.get_exit_code() == 0 ? rc : kUsageError;
  } catch (const Error& e) {
    std::cerr << "purity-lab: " << e.what() << "\n";
    return kUsageError;
  }
  return code;
}
