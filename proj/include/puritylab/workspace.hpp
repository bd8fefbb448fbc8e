#pragma once

// Workspace files: named rings, modules and inclusions plus an ordered list of
// checks, read from the TOML subset in toml.hpp. See README.md for the format.

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "puritylab/harness.hpp"
#include "puritylab/module.hpp"

namespace puritylab {

/// An index as written in a file: a number, or "inf" for UP_TO(up_to).
struct BoundSpec {
  std::size_t value = 1;
  bool unbounded = false;

  Bound resolve(std::size_t upTo) const { return unbounded ? Bound::upToN(upTo) : Bound::exact(value); }
};

enum class TargetKind { Module, Inclusion, Ring };

struct Query {
  std::string id;
  std::string kind;  // purity, purity-tensor, flat, flat-tensor, injective, injective-hom, ...
  TargetKind targetKind = TargetKind::Module;
  std::string target;
  BoundSpec n, m;
  std::size_t maxGens = 2;
  std::optional<Verdict> expect;
  std::size_t line = 0;
};

/// Checks accepted in [[check]] blocks, with the kind of object each expects.
const std::vector<std::pair<std::string, TargetKind>>& queryKinds();

struct Workspace {
  RunSettings settings;
  std::vector<std::pair<std::string, AlgebraPtr>> rings;
  std::vector<std::pair<std::string, Module>> modules;
  std::vector<std::pair<std::string, Submodule>> inclusions;
  std::vector<Query> queries;

  /// Throw UnknownName for undefined names.
  const AlgebraPtr& ring(const std::string& name) const;
  const Module& module(const std::string& name) const;
  const Submodule& inclusion(const std::string& name) const;
};

/// "inf" or a non-negative integer; ParseError otherwise.
BoundSpec parseBound(std::string_view text);
/// A query of the given kind against a named object of ws, as used by the
/// command line and bindings. Throws ParseError or UnknownName.
Query singleQuery(const Workspace& ws, const std::string& kind, const std::string& target, BoundSpec n,
                  BoundSpec m);

Workspace parseWorkspace(std::string_view text);
/// Reads and parses a file; throws IoError when it cannot be read.
Workspace loadWorkspace(const std::filesystem::path& path);

/// Runs every query in order. A query with `expect` passes iff the verdict
/// matches; otherwise the check's own verdict is the claim verdict.
SuiteResult runWorkspace(const Workspace& ws, const RunSettings& settings);

/// Re-verifies the witness of a failed workspace claim against the objects it
/// names. Returns false when the claim carries no witness or it does not
/// reproduce the failure.
bool replayClaim(const Workspace& ws, const Json& claim);

}  // namespace puritylab
