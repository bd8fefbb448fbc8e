#include "puritylab/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "puritylab/error.hpp"

namespace puritylab {

std::optional<std::uint64_t> TupleSpace::size() const {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < digits(); ++i) {
    if (total > UINT64_MAX / q) return std::nullopt;
    total *= q;
  }
  return total;
}

std::vector<Vector> TupleSpace::decode(std::uint64_t index) const {
  std::vector<Vector> gens(count, Vector(vectorDim(), 0));
  for (std::size_t j = 0; j < count; ++j)
    for (std::size_t p = 0; p < vectorDim(); ++p) {
      gens[j][p] = static_cast<Scalar>(index % q);
      index /= q;
    }
  return gens;
}

unsigned effectiveThreads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallelChunks(std::uint64_t total, unsigned threads,
                    const std::function<void(std::uint64_t, std::uint64_t)>& body) {
  threads = effectiveThreads(threads);
  if (threads == 1 || total < 2 * threads) {
    if (total > 0) body(0, total);
    return;
  }
  const std::uint64_t chunks = std::min<std::uint64_t>(total, std::uint64_t{threads} * 8);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failureMutex;
  auto worker = [&] {
    for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
      try {
        body(total * c / chunks, total * (c + 1) / chunks);
      } catch (...) {
        std::lock_guard lock(failureMutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::optional<std::uint64_t> findFirst(std::uint64_t total, unsigned threads,
                                       const std::function<bool(std::uint64_t)>& pred) {
  std::atomic<std::uint64_t> best{UINT64_MAX};
  parallelChunks(total, threads, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end && i < best.load(); ++i) {
      if (pred(i)) {
        std::uint64_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  });
  if (best.load() == UINT64_MAX) return std::nullopt;
  return best.load();
}

namespace {

std::mutex cacheMutex;
std::map<std::string, SubmoduleList> cache;

Subspace closure(const Algebra& r, const PrimeField& f, std::size_t n, const std::vector<Vector>& gens) {
  const std::size_t d = r.dim();
  Matrix rows(0, n * d);
  Vector img(n * d);
  for (const auto& g : gens) {
    if (isZero(g)) continue;
    for (std::size_t k = 0; k < d; ++k) {
      const Matrix& a = r.regular(k);
      for (std::size_t i = 0; i < n; ++i) {
        auto block = std::span<const Scalar>(g).subspan(i * d, d);
        auto out = apply(f, a, block);
        std::copy(out.begin(), out.end(), img.begin() + static_cast<std::ptrdiff_t>(i * d));
      }
      rows.appendRow(img);
    }
  }
  if (rows.rows() == 0) return Subspace(n * d);
  return Subspace::span(f, std::move(rows));
}

constexpr std::size_t kLatticeVectors = std::size_t{1} << 16;
constexpr std::size_t kLatticeSize = std::size_t{1} << 16;
constexpr std::size_t kStepTableSize = std::size_t{1} << 24;

/// dim C/PC.
std::size_t topDim(const Algebra& r, const PrimeField& f, std::size_t n, const Subspace& c) {
  const std::size_t d = r.dim();
  Matrix rows(0, n * d);
  Vector img(n * d);
  for (std::size_t b = 0; b < c.dim(); ++b) {
    const Vector v = c.basis().rowVector(b);
    for (const auto& x : r.radicalBasis()) {
      const Matrix a = r.regularOf(x);
      for (std::size_t i = 0; i < n; ++i) {
        auto out = apply(f, a, std::span<const Scalar>(v).subspan(i * d, d));
        std::copy(out.begin(), out.end(), img.begin() + static_cast<std::ptrdiff_t>(i * d));
      }
      rows.appendRow(img);
    }
  }
  const std::size_t radicalDim = rows.rows() == 0 ? 0 : Subspace::span(f, std::move(rows)).dim();
  return c.dim() - radicalDim;
}

// The submodule lattice of R^n as sums of cyclic submodules. step[s * cyclic
// + c] is the id of submodule s + cyclic class c, so the submodule generated
// by a tuple is a fold over its vectors.
struct Lattice {
  std::vector<Subspace> submodules;     // id 0 is zero
  std::vector<std::uint32_t> cyclicOf;  // vector index -> cyclic class
  std::size_t cyclicCount = 0;
  std::vector<std::uint32_t> step;  // empty when too large to tabulate
  std::size_t maxGen = 0;
};

using LatticePtr = std::shared_ptr<const Lattice>;
std::map<std::string, LatticePtr> latticeCache;

LatticePtr buildLattice(const Algebra& r, std::size_t n) {
  const auto& f = r.field();
  TupleSpace vectors{f.order(), n, 1, r.dim()};
  const auto count = vectors.size();
  if (!count || *count > kLatticeVectors) return nullptr;
  auto lat = std::make_shared<Lattice>();
  std::map<std::string, std::uint32_t> cyclicIds;
  std::vector<Subspace> cyclic;
  lat->cyclicOf.reserve(*count);
  for (std::uint64_t i = 0; i < *count; ++i) {
    Subspace s = closure(r, f, n, vectors.decode(i));
    auto [it, inserted] = cyclicIds.try_emplace(s.key(), static_cast<std::uint32_t>(cyclic.size()));
    if (inserted) cyclic.push_back(std::move(s));
    lat->cyclicOf.push_back(it->second);
  }
  lat->cyclicCount = cyclic.size();
  // Every submodule is a sum of cyclic ones; walk the lattice from zero.
  std::map<std::string, std::uint32_t> ids;
  lat->submodules.push_back(Subspace(n * r.dim()));
  ids.emplace(lat->submodules[0].key(), 0);
  bool tabulate = true;
  for (std::size_t head = 0; head < lat->submodules.size(); ++head)
    for (std::size_t c = 0; c < cyclic.size(); ++c) {
      Subspace s = sum(f, lat->submodules[head], cyclic[c]);
      auto [it, inserted] = ids.try_emplace(s.key(), static_cast<std::uint32_t>(lat->submodules.size()));
      if (inserted) {
        if (lat->submodules.size() >= kLatticeSize) return nullptr;
        lat->submodules.push_back(std::move(s));
      }
      tabulate = tabulate && lat->submodules.size() * cyclic.size() <= kStepTableSize;
      if (tabulate) lat->step.push_back(it->second);
    }
  if (!tabulate) lat->step.clear();
  for (const auto& s : lat->submodules) lat->maxGen = std::max(lat->maxGen, topDim(r, f, n, s));
  return lat;
}

LatticePtr lattice(const Algebra& r, std::size_t n) {
  const std::string key = r.fingerprint() + "|" + std::to_string(n);
  {
    std::lock_guard lock(cacheMutex);
    if (auto it = latticeCache.find(key); it != latticeCache.end()) return it->second;
  }
  auto lat = buildLattice(r, n);
  std::lock_guard lock(cacheMutex);
  return latticeCache.try_emplace(key, std::move(lat)).first->second;
}

bool directlyEnumerable(const Algebra& r, std::size_t n, std::size_t m) {
  const auto size = TupleSpace{r.field().order(), n, m, r.dim()}.size();
  return size && *size <= kLatticeVectors;
}

void enumerateByClosure(const Algebra& r, std::size_t n, const TupleSpace& space, const TupleSpace& padded,
                        std::uint64_t total, unsigned threads, std::vector<GeneratedSubmodule>& out);

}  // namespace

std::optional<std::size_t> maxSubmoduleGenerators(const Algebra& r, std::size_t n) {
  const auto lat = lattice(r, n);
  if (!lat) return std::nullopt;
  return lat->maxGen;
}

std::size_t effectiveGeneratorCount(const Algebra& r, std::size_t n, std::size_t m) {
  // Small spaces are enumerated directly; the lattice walk only pays off for big ones.
  if (directlyEnumerable(r, n, m)) return m;
  const auto g = maxSubmoduleGenerators(r, n);
  return g ? std::min(m, std::max<std::size_t>(*g, 1)) : m;
}

void clearEnumerationCache() {
  std::lock_guard lock(cacheMutex);
  cache.clear();
  latticeCache.clear();
}

SubmoduleList enumerateSubmodules(const Algebra& r, std::size_t n, std::size_t m, unsigned threads,
                                  std::uint64_t budget) {
  const std::size_t g = effectiveGeneratorCount(r, n, m);
  TupleSpace space{r.field().order(), n, g, r.dim()};
  const TupleSpace padded{r.field().order(), n, m, r.dim()};
  const auto total = space.size();
  if (!total || *total > budget)
    throw Error(ErrorCode::BudgetExceeded, "enumerating " + std::to_string(m) + "-generated submodules of R^" +
                                               std::to_string(n) + " needs q^" + std::to_string(space.digits()) +
                                               " tuples, budget is " + std::to_string(budget));
  const std::string key = r.fingerprint() + "|" + std::to_string(n) + "|" + std::to_string(m);
  {
    std::lock_guard lock(cacheMutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  auto list = std::make_shared<std::vector<GeneratedSubmodule>>();
  const LatticePtr lat = directlyEnumerable(r, n, m) ? nullptr : lattice(r, n);
  if (lat && !lat->step.empty()) {
    // Fold each tuple through the step table; ids stand in for subspace keys.
    const std::uint64_t vectors = lat->cyclicOf.size();
    std::vector<std::uint64_t> first(lat->submodules.size(), UINT64_MAX);
    std::mutex mergeMutex;
    parallelChunks(*total, threads, [&](std::uint64_t begin, std::uint64_t end) {
      std::vector<std::uint64_t> local(lat->submodules.size(), UINT64_MAX);
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        std::uint32_t id = 0;
        std::uint64_t rest = idx;
        for (std::size_t j = 0; j < g; ++j, rest /= vectors)
          id = lat->step[id * lat->cyclicCount + lat->cyclicOf[rest % vectors]];
        if (local[id] == UINT64_MAX) local[id] = idx;
      }
      std::lock_guard lock(mergeMutex);
      for (std::size_t i = 0; i < local.size(); ++i) first[i] = std::min(first[i], local[i]);
    });
    for (std::size_t i = 0; i < first.size(); ++i)
      if (first[i] != UINT64_MAX) list->push_back({lat->submodules[i], padded.decode(first[i]), first[i]});
  } else {
    enumerateByClosure(r, n, space, padded, *total, threads, *list);
  }
  std::sort(list->begin(), list->end(), [](const auto& a, const auto& b) { return a.firstIndex < b.firstIndex; });

  std::lock_guard lock(cacheMutex);
  auto [it, inserted] = cache.try_emplace(key, std::move(list));
  return it->second;
}

namespace {

void enumerateByClosure(const Algebra& r, std::size_t n, const TupleSpace& space, const TupleSpace& padded,
                        std::uint64_t total, unsigned threads, std::vector<GeneratedSubmodule>& out) {
  const auto& f = r.field();
  std::unordered_map<std::string, std::pair<std::uint64_t, Subspace>> merged;

  std::mutex mergeMutex;
  parallelChunks(total, threads, [&](std::uint64_t begin, std::uint64_t end) {
    std::unordered_map<std::string, std::pair<std::uint64_t, Subspace>> local;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      Subspace s = closure(r, f, n, space.decode(idx));
      auto k = s.key();
      local.try_emplace(std::move(k), idx, std::move(s));  // first hit in a chunk is its minimum
    }
    std::lock_guard lock(mergeMutex);
    for (auto& [k, v] : local) {
      auto [it, inserted] = merged.try_emplace(k, v);
      if (!inserted && v.first < it->second.first) it->second = v;
    }
  });

  out.reserve(merged.size());
  for (auto& [k, v] : merged) out.push_back({std::move(v.second), padded.decode(v.first), v.first});
}

}  // namespace

}  // namespace puritylab
