#include "puritylab/workspace.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "puritylab/constructions.hpp"
#include "puritylab/corpus.hpp"
#include "puritylab/error.hpp"
#include "puritylab/toml.hpp"

namespace puritylab {

const std::vector<std::pair<std::string, TargetKind>>& queryKinds() {
  static const std::vector<std::pair<std::string, TargetKind>> kinds = {
      {"purity", TargetKind::Inclusion},       {"purity-tensor", TargetKind::Inclusion},
      {"flat", TargetKind::Module},            {"flat-tensor", TargetKind::Module},
      {"injective", TargetKind::Module},       {"injective-hom", TargetKind::Module},
      {"end-local", TargetKind::Module},       {"end-local-direct", TargetKind::Module},
      {"fitting", TargetKind::Module},         {"free", TargetKind::Module},
      {"sequence-purity", TargetKind::Module}, {"double-annihilator", TargetKind::Ring},
  };
  return kinds;
}

namespace {

template <class T>
const T& lookup(const std::vector<std::pair<std::string, T>>& items, const std::string& name, const char* what) {
  for (const auto& [n, v] : items)
    if (n == name) return v;
  throw Error(ErrorCode::UnknownName, std::string(what) + " '" + name + "' is not defined");
}

bool needsIndices(const std::string& kind) {
  return kind.starts_with("purity") || kind.starts_with("flat") || kind.starts_with("injective") ||
         kind == "sequence-purity";
}

std::string stripCode(const Error& e) {
  std::string msg = e.what();
  const auto cut = msg.find(": ");
  return cut == std::string::npos ? msg : msg.substr(cut + 2);
}

class Builder {
 public:
  explicit Builder(const TomlDocument& doc) : doc_(doc) {}

  Workspace build() {
    const auto& root = doc_.root;
    for (const auto& [key, _] : root.items())
      if (key != "settings" && key != "ring" && key != "module" && key != "inclusion" && key != "check")
        fail("/" + key, "unknown section '" + key + "'");
    if (root.contains("settings")) readSettings(root["settings"]);
    if (root.contains("ring")) {
      requireTable("/ring", root["ring"]);
      for (const auto& [name, body] : root["ring"].items()) {
        guarded("/ring/" + name, [&] { ws_.rings.emplace_back(name, buildRing("/ring/" + name, body)); });
      }
    }
    if (root.contains("module")) {
      requireTable("/module", root["module"]);
      for (const auto& [name, _] : root["module"].items()) resolveModule(name, "/module");
    }
    if (root.contains("inclusion")) {
      requireTable("/inclusion", root["inclusion"]);
      for (const auto& [name, body] : root["inclusion"].items()) {
        const std::string ptr = "/inclusion/" + name;
        guarded(ptr, [&] { ws_.inclusions.emplace_back(name, buildInclusion(ptr, body)); });
      }
    }
    if (root.contains("check")) {
      if (!root["check"].is_array()) fail("/check", "checks must be written as [[check]] blocks");
      std::size_t i = 0;
      for (const auto& body : root["check"]) {
        const std::string ptr = "/check/" + std::to_string(i);
        ws_.queries.push_back(buildQuery(ptr, body, i));
        ++i;
      }
    }
    return std::move(ws_);
  }

 private:
  [[noreturn]] void fail(const std::string& pointer, const std::string& msg,
                         ErrorCode code = ErrorCode::ParseError) const {
    throw Error(code, "line " + std::to_string(doc_.lineOf(pointer)) + ": " + msg);
  }

  /// Prefixes library errors raised while building an object with its line.
  void guarded(const std::string& pointer, const std::function<void()>& body) const {
    try {
      body();
    } catch (const Error& e) {
      if (stripCode(e).starts_with("line ")) throw;
      fail(pointer, stripCode(e), e.code());
    }
  }

  void requireTable(const std::string& pointer, const OrderedJson& j) const {
    if (!j.is_object()) fail(pointer, "expected a table");
  }

  void allowKeys(const std::string& pointer, const OrderedJson& j, std::initializer_list<const char*> keys) const {
    requireTable(pointer, j);
    for (const auto& [key, _] : j.items()) {
      bool ok = false;
      for (const char* k : keys) ok = ok || key == k;
      if (!ok) fail(pointer + "/" + key, "unknown key '" + key + "'");
    }
  }

  std::uint64_t number(const std::string& pointer, const OrderedJson& j) const {
    if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0))
      fail(pointer, "expected a non-negative integer");
    return j.get<std::uint64_t>();
  }

  std::string text(const std::string& pointer, const OrderedJson& j) const {
    if (!j.is_string()) fail(pointer, "expected a string");
    return j.get<std::string>();
  }

  const OrderedJson& field(const std::string& pointer, const OrderedJson& j, const char* key) const {
    if (!j.contains(key)) fail(pointer, std::string("missing key '") + key + "'");
    return j[key];
  }

  void readSettings(const OrderedJson& s) {
    allowKeys("/settings", s, {"threads", "budget", "up_to", "seed", "end_budget"});
    auto& out = ws_.settings;
    if (s.contains("threads")) out.threads = static_cast<unsigned>(number("/settings/threads", s["threads"]));
    if (s.contains("budget")) out.budget = number("/settings/budget", s["budget"]);
    if (s.contains("up_to")) out.upTo = number("/settings/up_to", s["up_to"]);
    if (s.contains("seed")) out.seed = number("/settings/seed", s["seed"]);
    if (s.contains("end_budget")) out.endBudget = number("/settings/end_budget", s["end_budget"]);
    try {
      validateSettings(out);
    } catch (const Error& e) {
      // Messages start with the offending key.
      const std::string msg = stripCode(e);
      fail("/settings/" + msg.substr(0, msg.find(' ')), msg, e.code());
    }
  }

  AlgebraPtr buildRing(const std::string& ptr, const OrderedJson& body) const {
    allowKeys(ptr, body, {"family", "q", "t", "e", "exponents", "labels", "mulTable"});
    const auto q = static_cast<Scalar>(number(ptr + "/q", field(ptr, body, "q")));
    if (body.contains("family")) {
      const std::string family = text(ptr + "/family", body["family"]);
      std::vector<std::size_t> params;
      if (family == "squareZero") {
        params.push_back(number(ptr + "/t", field(ptr, body, "t")));
      } else if (family == "chain") {
        params.push_back(number(ptr + "/e", field(ptr, body, "e")));
      } else if (family == "truncated") {
        const auto& ex = field(ptr, body, "exponents");
        if (!ex.is_array()) fail(ptr + "/exponents", "expected an array of exponents");
        for (std::size_t i = 0; i < ex.size(); ++i)
          params.push_back(number(ptr + "/exponents/" + std::to_string(i), ex[i]));
      } else {
        fail(ptr + "/family", "unknown family '" + family + "'", ErrorCode::UnsupportedFamily);
      }
      return buildNamedAlgebra(family, q, params);
    }
    const auto& table = field(ptr, body, "mulTable");
    if (!table.is_array()) fail(ptr + "/mulTable", "mulTable must be a d x d array of vectors");
    const std::size_t d = table.size();
    MultiplicationTable mt(d);
    for (std::size_t i = 0; i < d; ++i) {
      const std::string rowPtr = ptr + "/mulTable/" + std::to_string(i);
      if (!table[i].is_array() || table[i].size() != d) fail(rowPtr, "mulTable must be a d x d array of vectors");
      for (std::size_t j = 0; j < d; ++j) mt[i].push_back(scalars(rowPtr + "/" + std::to_string(j), table[i][j], d, q));
    }
    std::vector<std::string> labels;
    if (body.contains("labels")) {
      const auto& l = body["labels"];
      if (!l.is_array() || l.size() != d) fail(ptr + "/labels", "expected one label per basis element");
      for (std::size_t i = 0; i < d; ++i) labels.push_back(text(ptr + "/labels/" + std::to_string(i), l[i]));
    } else {
      for (std::size_t i = 0; i < d; ++i) labels.push_back(i == 0 ? "1" : "e" + std::to_string(i));
    }
    return Algebra::build(PrimeField(q), std::move(labels), std::move(mt), ptr.substr(ptr.rfind('/') + 1));
  }

  Vector scalars(const std::string& ptr, const OrderedJson& j, std::size_t len, Scalar q) const {
    if (!j.is_array() || j.size() != len) fail(ptr, "expected a vector of length " + std::to_string(len));
    Vector v;
    for (std::size_t k = 0; k < len; ++k) {
      if (!j[k].is_number_integer()) fail(ptr, "expected integer entries");
      const auto x = j[k].get<std::int64_t>() % static_cast<std::int64_t>(q);
      v.push_back(static_cast<Scalar>(x < 0 ? x + q : x));
    }
    return v;
  }

  RingElement element(const std::string& ptr, const OrderedJson& j, const Algebra& r) const {
    if (j.is_string()) {
      RingElement e;
      guarded(ptr, [&] { e = r.parseElement(j.get<std::string>()); });
      return e;
    }
    return RingElement{scalars(ptr, j, r.dim(), r.field().order())};
  }

  const Module& resolveModule(const std::string& name, const std::string& fromPtr) {
    for (const auto& [n, m] : ws_.modules)
      if (n == name) return m;
    const auto& table = doc_.root.contains("module") ? doc_.root["module"] : OrderedJson::object();
    if (!table.contains(name)) fail(fromPtr, "module '" + name + "' is not defined", ErrorCode::UnknownName);
    const std::string ptr = "/module/" + name;
    if (!inProgress_.insert(name).second) fail(ptr, "module '" + name + "' is defined in terms of itself");
    Module built;
    guarded(ptr, [&] { built = buildModule(ptr, table[name]); });
    inProgress_.erase(name);
    ws_.modules.emplace_back(name, std::move(built));
    return ws_.modules.back().second;
  }

  Module buildModule(const std::string& ptr, const OrderedJson& body) {
    allowKeys(ptr, body, {"ring", "free", "presentation", "cyclic", "residue", "warfield", "dual", "fqdual", "sum",
                          "actions"});
    int forms = 0;
    for (const char* k : {"free", "presentation", "cyclic", "residue", "warfield", "dual", "fqdual", "sum", "actions"})
      forms += body.contains(k) ? 1 : 0;
    if (forms != 1)
      fail(ptr, "a module needs exactly one of free, presentation, cyclic, residue, warfield, dual, fqdual, sum, "
                "actions");

    std::optional<AlgebraPtr> declared;
    if (body.contains("ring")) declared = lookupRing(ptr + "/ring", text(ptr + "/ring", body["ring"]));
    auto needRing = [&]() -> const AlgebraPtr& {
      if (!declared) fail(ptr, "missing key 'ring'");
      return *declared;
    };
    auto checkRing = [&](const Module& m) {
      if (declared && !sameRing(**declared, m.ring()))
        fail(ptr + "/ring", "module is defined over a different ring", ErrorCode::RingMismatch);
      return m;
    };

    if (body.contains("free")) return freeModule(needRing(), number(ptr + "/free", body["free"]));
    if (body.contains("residue")) {
      if (body["residue"] != true) fail(ptr + "/residue", "residue must be true");
      return residueField(needRing());
    }
    if (body.contains("cyclic")) {
      const auto& r = needRing();
      const auto& gens = body["cyclic"];
      if (!gens.is_array()) fail(ptr + "/cyclic", "expected a list of ideal generators");
      std::vector<RingElement> els;
      for (std::size_t i = 0; i < gens.size(); ++i)
        els.push_back(element(ptr + "/cyclic/" + std::to_string(i), gens[i], *r));
      return cyclicModule(r, idealGenerate(*r, els));
    }
    if (body.contains("presentation")) {
      const auto& r = needRing();
      const std::string pp = ptr + "/presentation";
      const auto& p = body["presentation"];
      allowKeys(pp, p, {"rank", "relations"});
      const std::size_t rank = number(pp + "/rank", field(pp, p, "rank"));
      const auto& rels = p.contains("relations") ? p["relations"] : OrderedJson::array();
      if (!rels.is_array()) fail(pp + "/relations", "expected a list of relation columns");
      RelationMatrix c(rank, rels.size(), *r);
      for (std::size_t j = 0; j < rels.size(); ++j) {
        const std::string cp = pp + "/relations/" + std::to_string(j);
        if (!rels[j].is_array() || rels[j].size() != rank)
          fail(cp, "each relation needs " + std::to_string(rank) + " entries");
        for (std::size_t i = 0; i < rank; ++i) c.at(i, j) = element(cp + "/" + std::to_string(i), rels[j][i], *r);
      }
      return fromPresentation(r, rank, c);
    }
    if (body.contains("warfield")) {
      const auto& r = needRing();
      const std::string wp = ptr + "/warfield";
      const auto& w = body["warfield"];
      allowKeys(wp, w, {"p", "n", "m", "gens"});
      StaircaseSpec spec;
      spec.p = number(wp + "/p", field(wp, w, "p"));
      spec.n = number(wp + "/n", field(wp, w, "n"));
      spec.m = number(wp + "/m", field(wp, w, "m"));
      if (w.contains("gens")) {
        if (!w["gens"].is_array()) fail(wp + "/gens", "expected a list of ring elements");
        for (std::size_t i = 0; i < w["gens"].size(); ++i)
          spec.idealGens.push_back(element(wp + "/gens/" + std::to_string(i), w["gens"][i], *r));
      } else {
        spec.idealGens = radicalGenerators(*r, spec.p + 1);
      }
      return warfieldModule(r, spec);
    }
    if (body.contains("dual"))
      return checkRing(auslanderBridgerDual(resolveModule(text(ptr + "/dual", body["dual"]), ptr + "/dual")));
    if (body.contains("fqdual"))
      return checkRing(fqDual(resolveModule(text(ptr + "/fqdual", body["fqdual"]), ptr + "/fqdual")));
    if (body.contains("sum")) {
      const auto& parts = body["sum"];
      if (!parts.is_array() || parts.size() < 2) fail(ptr + "/sum", "sum needs at least two module names");
      Module acc = resolveModule(text(ptr + "/sum/0", parts[0]), ptr + "/sum/0");
      for (std::size_t i = 1; i < parts.size(); ++i) {
        const auto& next = resolveModule(text(ptr + "/sum/" + std::to_string(i), parts[i]), ptr + "/sum");
        acc = directSum(acc, next).module;
      }
      return checkRing(acc);
    }
    const auto& r = needRing();
    const auto& acts = body["actions"];
    if (!acts.is_array() || acts.size() != r->dim())
      fail(ptr + "/actions", "expected one action matrix per ring basis element");
    std::vector<Matrix> mats;
    std::size_t dim = 0;
    for (std::size_t k = 0; k < acts.size(); ++k) {
      const std::string ap = ptr + "/actions/" + std::to_string(k);
      if (!acts[k].is_array()) fail(ap, "expected a matrix");
      if (k == 0) dim = acts[k].size();
      if (acts[k].size() != dim) fail(ap, "action matrices must all be square of the same size");
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < dim; ++i)
        rows.push_back(scalars(ap + "/" + std::to_string(i), acts[k][i], dim, r->field().order()));
      mats.push_back(Matrix::fromRows(rows, dim));
    }
    return Module(r, std::move(mats));
  }

  AlgebraPtr lookupRing(const std::string& ptr, const std::string& name) const {
    for (const auto& [n, r] : ws_.rings)
      if (n == name) return r;
    fail(ptr, "ring '" + name + "' is not defined", ErrorCode::UnknownName);
  }

  Submodule buildInclusion(const std::string& ptr, const OrderedJson& body) {
    allowKeys(ptr, body, {"module", "generators", "kernel_of_cover"});
    if (body.contains("kernel_of_cover") == body.contains("module"))
      fail(ptr, "an inclusion needs either module (with generators) or kernel_of_cover");
    if (body.contains("kernel_of_cover")) {
      const auto& m = resolveModule(text(ptr + "/kernel_of_cover", body["kernel_of_cover"]), ptr + "/kernel_of_cover");
      auto mp = minimalPresentation(m);
      return Submodule(mp.cover.source(), mp.kernel);
    }
    const auto& b = resolveModule(text(ptr + "/module", body["module"]), ptr + "/module");
    const auto& gens = body.contains("generators") ? body["generators"] : OrderedJson::array();
    if (!gens.is_array()) fail(ptr + "/generators", "expected a list of generators");
    std::vector<Vector> vecs;
    const auto& r = b.ring();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const std::string gp = ptr + "/generators/" + std::to_string(g);
      const auto& item = gens[g];
      if (item.is_array() && !item.empty() && item[0].is_string()) {
        // Components of an element of a free module R^n.
        const auto& p = b.presentation();
        if (!p || p->relations.cols() != 0 || p->generators * r.dim() != b.dim())
          fail(gp, "ring-element generators need a free module");
        if (item.size() != p->generators) fail(gp, "expected " + std::to_string(p->generators) + " components");
        Vector v;
        for (std::size_t i = 0; i < item.size(); ++i) {
          auto e = element(gp + "/" + std::to_string(i), item[i], r);
          v.insert(v.end(), e.coeffs.begin(), e.coeffs.end());
        }
        vecs.push_back(std::move(v));
      } else {
        vecs.push_back(scalars(gp, item, b.dim(), r.field().order()));
      }
    }
    return submoduleSpan(b, vecs);
  }

  BoundSpec bound(const std::string& ptr, const OrderedJson& j) const {
    if (j.is_string()) {
      if (j.get<std::string>() != "inf") fail(ptr, "expected an integer or \"inf\"");
      return {0, true};
    }
    return {static_cast<std::size_t>(number(ptr, j)), false};
  }

  Query buildQuery(const std::string& ptr, const OrderedJson& body, std::size_t index) {
    allowKeys(ptr, body, {"id", "kind", "module", "inclusion", "ring", "n", "m", "max_gens", "expect"});
    Query q;
    q.line = doc_.lineOf(ptr);
    q.kind = text(ptr + "/kind", field(ptr, body, "kind"));
    const auto& kinds = queryKinds();
    auto it = std::find_if(kinds.begin(), kinds.end(), [&](const auto& k) { return k.first == q.kind; });
    if (it == kinds.end()) fail(ptr + "/kind", "unknown check kind '" + q.kind + "'");
    q.targetKind = it->second;
    q.id = body.contains("id") ? text(ptr + "/id", body["id"]) : "check-" + std::to_string(index + 1);
    for (const auto& other : ws_.queries)
      if (other.id == q.id) fail(ptr + "/id", "duplicate check id '" + q.id + "'");

    const char* key = q.targetKind == TargetKind::Module ? "module"
                      : q.targetKind == TargetKind::Inclusion ? "inclusion"
                                                               : "ring";
    for (const char* k : {"module", "inclusion", "ring"})
      if (std::string(k) != key && body.contains(k))
        fail(ptr + "/" + k, "check '" + q.kind + "' takes a " + key + ", not a " + k);
    q.target = text(ptr + "/" + key, field(ptr, body, key));
    const std::string tp = ptr + "/" + key;
    switch (q.targetKind) {
      case TargetKind::Module: resolveModule(q.target, tp); break;
      case TargetKind::Inclusion:
        guarded(tp, [&] { (void)ws_.inclusion(q.target); });
        break;
      case TargetKind::Ring: lookupRing(tp, q.target); break;
    }

    if (needsIndices(q.kind)) {
      q.n = bound(ptr + "/n", field(ptr, body, "n"));
      q.m = bound(ptr + "/m", field(ptr, body, "m"));
    } else if (body.contains("n") || body.contains("m")) {
      fail(ptr, "check '" + q.kind + "' takes no n or m");
    }
    if (body.contains("max_gens")) {
      if (q.kind != "double-annihilator") fail(ptr + "/max_gens", "max_gens only applies to double-annihilator");
      q.maxGens = number(ptr + "/max_gens", body["max_gens"]);
    }
    if (body.contains("expect")) {
      const std::string e = text(ptr + "/expect", body["expect"]);
      if (e != "pass" && e != "fail" && e != "undecided") fail(ptr + "/expect", "expect must be pass, fail or undecided");
      q.expect = parseVerdict(e);
    }
    return q;
  }

  const TomlDocument& doc_;
  Workspace ws_;
  std::set<std::string> inProgress_;
};

CheckReport runQuery(const Workspace& ws, const Query& q, const RunSettings& s) {
  const auto opts = s.options();
  const Bound n = q.n.resolve(s.upTo), m = q.m.resolve(s.upTo);
  if (q.kind == "purity") return checkPurity(ws.inclusion(q.target), n, m, opts);
  if (q.kind == "purity-tensor") return checkPurityViaTensor(ws.inclusion(q.target), n, m, opts);
  if (q.kind == "double-annihilator") return doubleAnnihilatorTest(ws.ring(q.target), q.maxGens, opts);
  const Module& mod = ws.module(q.target);
  if (q.kind == "flat") return checkFlat(mod, n, m, opts);
  if (q.kind == "flat-tensor") return checkFlatViaTensor(mod, n, m, opts);
  if (q.kind == "injective") return checkInjective(mod, n, m, opts);
  if (q.kind == "injective-hom") return checkInjectiveViaHom(mod, n, m, opts);
  if (q.kind == "end-local") return checkEndLocal(mod, opts);
  if (q.kind == "end-local-direct") return checkEndLocalDirect(mod, opts);
  if (q.kind == "fitting") return checkFitting(mod, opts);
  if (q.kind == "free") return checkFree(mod);
  if (q.kind == "sequence-purity") return checkSequencePurity(minimalPresentation(mod).cover, n, m, opts);
  throw Error(ErrorCode::ParseError, "unknown check kind '" + q.kind + "'");
}

std::string anchorOf(const Query& q, const RunSettings& s) {
  std::string a = q.kind + " " + q.target;
  if (needsIndices(q.kind)) a += " (" + q.n.resolve(s.upTo).label() + "," + q.m.resolve(s.upTo).label() + ")";
  return a;
}

}  // namespace

const AlgebraPtr& Workspace::ring(const std::string& name) const { return lookup(rings, name, "ring"); }
const Module& Workspace::module(const std::string& name) const { return lookup(modules, name, "module"); }
const Submodule& Workspace::inclusion(const std::string& name) const {
  return lookup(inclusions, name, "inclusion");
}

BoundSpec parseBound(std::string_view text) {
  if (text == "inf") return {0, true};
  std::size_t v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
    throw Error(ErrorCode::ParseError, "bad index '" + std::string(text) + "'");
  return {v, false};
}

Query singleQuery(const Workspace& ws, const std::string& kind, const std::string& target, BoundSpec n,
                  BoundSpec m) {
  Query q;
  q.id = kind;
  q.kind = kind;
  q.target = target;
  q.n = n;
  q.m = m;
  bool known = false;
  for (const auto& [k, t] : queryKinds())
    if (k == kind) known = true, q.targetKind = t;
  if (!known) throw Error(ErrorCode::ParseError, "unknown check kind '" + kind + "'");
  switch (q.targetKind) {
    case TargetKind::Module: (void)ws.module(target); break;
    case TargetKind::Inclusion: (void)ws.inclusion(target); break;
    case TargetKind::Ring: (void)ws.ring(target); break;
  }
  return q;
}

Workspace parseWorkspace(std::string_view text) {
  const auto doc = parseToml(text);
  return Builder(doc).build();
}

Workspace loadWorkspace(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseWorkspace(buf.str());
}

SuiteResult runWorkspace(const Workspace& ws, const RunSettings& settings) {
  validateSettings(settings);
  SuiteResult result;
  result.name = "workspace";
  result.settings = settings;
  for (const auto& q : ws.queries) {
    const auto start = std::chrono::steady_clock::now();
    ClaimResult c;
    c.id = q.id;
    c.anchor = anchorOf(q, settings);
    const CheckReport rep = runQuery(ws, q, settings);
    c.details = toJson(rep);
    c.details["kind"] = q.kind;
    c.details["target"] = q.target;
    c.witness = rep.witness;
    if (q.expect) {
      c.details["expect"] = verdictName(*q.expect);
      if (rep.verdict == Verdict::Undecided && *q.expect != Verdict::Undecided)
        c.verdict = Verdict::Undecided;
      else
        c.verdict = rep.verdict == *q.expect ? Verdict::Pass : Verdict::Fail;
    } else {
      c.verdict = rep.verdict;
    }
    c.elapsedSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.claims.push_back(std::move(c));
  }
  return result;
}

bool replayClaim(const Workspace& ws, const Json& claim) {
  const Json& w = claim.contains("witness") ? claim.at("witness") : Json();
  if (w.is_null()) return false;
  const auto& details = claim.at("details");
  const std::string kind = details.at("kind").get<std::string>();
  const std::string target = details.at("target").get<std::string>();
  if (kind == "purity") return replayPurityWitness(ws.inclusion(target), w);
  if (kind == "purity-tensor") {
    const auto& a = ws.inclusion(target);
    const auto& b = a.ambient();
    const auto c = relationsFromJson(b.ring(), w.at("coefficients"));
    const Module g = fromPresentation(b.ringPtr(), c.rows(), c);
    return !tensorMapOnInclusion(g, a).isInjective();
  }
  if (kind == "double-annihilator") return replayDoubleAnnihilatorWitness(*ws.ring(target), w);
  const Module& m = ws.module(target);
  if (kind == "flat" || kind == "flat-tensor") return replayFlatWitness(m, w);
  if (kind == "injective" || kind == "injective-hom") return replayInjectiveWitness(m, w);
  if (kind == "end-local" || kind == "end-local-direct") return replayEndLocalWitness(m, w);
  if (kind == "fitting") return replayFittingWitness(m, w);
  if (kind == "free") return replayFreeWitness(m, w);
  if (kind == "sequence-purity") {
    const auto mp = minimalPresentation(m);
    return replayPurityWitness(Submodule(mp.cover.source(), mp.kernel), w);
  }
  return false;
}

}  // namespace puritylab
