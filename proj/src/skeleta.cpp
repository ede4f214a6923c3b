#include "quivergrass/skeleta.hpp"

#include <algorithm>
#include <thread>

#include "quivergrass/error.hpp"

namespace qg {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::vector<VertexId> expand(const DimensionVector& d) {
  std::vector<VertexId> slots;
  for (std::uint32_t v = 0; v < d.size(); ++v)
    for (std::size_t k = 0; k < d[v]; ++k) slots.push_back(VertexId{v});
  return slots;
}

}  // namespace

std::string_view to_string(Setting s) {
  switch (s) {
    case Setting::Small: return "small";
    case Setting::Big: return "big";
    case Setting::General: return "general";
  }
  return "unknown";
}

ProjectiveContext::ProjectiveContext(std::shared_ptr<const Algebra> algebra, Setting setting, std::vector<VertexId> slots)
    : algebra_(std::move(algebra)), setting_(setting), slots_(std::move(slots)) {
  for (VertexId v : slots_) {
    if (v.index >= algebra_->quiver().vertex_count()) fail(ErrorCode::DimensionMismatch, "slot vertex out of range");
  }
}

ProjectiveContext ProjectiveContext::small(std::shared_ptr<const Algebra> algebra, const DimensionVector& top) {
  if (top.size() != algebra->quiver().vertex_count()) fail(ErrorCode::DimensionMismatch, "top has the wrong number of entries");
  return ProjectiveContext(std::move(algebra), Setting::Small, expand(top));
}

ProjectiveContext ProjectiveContext::big(std::shared_ptr<const Algebra> algebra, const DimensionVector& d) {
  if (d.size() != algebra->quiver().vertex_count()) fail(ErrorCode::DimensionMismatch, "dimension vector has the wrong number of entries");
  return ProjectiveContext(std::move(algebra), Setting::Big, expand(d));
}

ProjectiveContext ProjectiveContext::general(std::shared_ptr<const Algebra> algebra, std::vector<VertexId> slot_vertices) {
  return ProjectiveContext(std::move(algebra), Setting::General, std::move(slot_vertices));
}

DimensionVector ProjectiveContext::slot_multiplicities() const {
  DimensionVector d(algebra_->quiver().vertex_count(), 0);
  for (VertexId v : slots_) ++d[v.index];
  return d;
}

Skeleton::Skeleton(std::vector<ModPath> paths) : paths_(std::move(paths)) {
  std::sort(paths_.begin(), paths_.end());
  paths_.erase(std::unique(paths_.begin(), paths_.end()), paths_.end());
}

bool Skeleton::contains(const ModPath& p) const { return std::binary_search(paths_.begin(), paths_.end(), p); }

std::vector<ModPath> Skeleton::layer(std::size_t length) const {
  std::vector<ModPath> out;
  for (const auto& p : paths_)
    if (p.length() == length) out.push_back(p);
  return out;
}

bool is_skeleton(const Skeleton& sigma, const ProjectiveContext& ctx, std::string* reason) {
  auto reject = [&](std::string why) {
    if (reason) *reason = std::move(why);
    return false;
  };
  const Quiver& quiver = ctx.algebra().quiver();
  for (const auto& p : sigma) {
    if (p.slot >= ctx.slot_count()) return reject("slot " + std::to_string(p.slot + 1) + " does not exist");
    if (p.path.source != ctx.slot_vertex(p.slot)) {
      return reject("path '" + quiver.format(p) + "' does not start at the norming vertex of its slot");
    }
    if (p.length() > ctx.algebra().loewy_bound()) return reject("path '" + quiver.format(p) + "' exceeds the Loewy bound");
    if (!p.path.is_trivial()) {
      ModPath parent{p.slot, p.path};
      parent.path.arrows.pop_back();
      parent.path.target = parent.path.arrows.empty() ? parent.path.source : quiver.arrow(parent.path.arrows.back()).target;
      if (!sigma.contains(parent)) return reject("initial subpath of '" + quiver.format(p) + "' is missing");
    }
  }
  if (ctx.setting() != Setting::Big) {
    for (std::size_t r = 0; r < ctx.slot_count(); ++r) {
      if (!sigma.contains(ModPath{r, Path::trivial(ctx.slot_vertex(r))})) {
        return reject("root of slot " + std::to_string(r + 1) + " is missing");
      }
    }
  }
  return true;
}

SemisimpleSequence compatible_sequence(const Skeleton& sigma, const ProjectiveContext& ctx) {
  const std::size_t n = ctx.algebra().quiver().vertex_count();
  SemisimpleSequence s;
  s.layers.assign(ctx.algebra().loewy_bound() + 1, DimensionVector(n, 0));
  for (const auto& p : sigma) {
    if (p.length() >= s.layers.size()) fail(ErrorCode::InvalidSkeleton, "path exceeds the Loewy bound");
    ++s.layers[p.length()][p.target().index];
  }
  return s;
}

Skeleton canonical_relabeling(const Skeleton& sigma, const ProjectiveContext& ctx) {
  std::vector<std::vector<Path>> trees(ctx.slot_count());
  for (const auto& p : sigma) trees.at(p.slot).push_back(p.path);
  // Flattened skeleta compare slot by slot; a tree that extends another
  // tree sorts first because its next path precedes the next slot's root.
  auto tree_less = [](const std::vector<Path>& a, const std::vector<Path>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() > b.size();
  };
  std::map<VertexId, std::vector<std::size_t>> groups;
  for (std::size_t r = 0; r < ctx.slot_count(); ++r) groups[ctx.slot_vertex(r)].push_back(r);
  std::vector<ModPath> out;
  for (const auto& [vertex, slots] : groups) {
    std::vector<std::vector<Path>> group;
    for (auto r : slots) group.push_back(trees[r]);
    std::sort(group.begin(), group.end(), tree_less);
    for (std::size_t k = 0; k < slots.size(); ++k)
      for (auto& p : group[k]) out.push_back(ModPath{slots[k], std::move(p)});
  }
  return Skeleton(std::move(out));
}

namespace {

// Depth-first enumeration with one decision per level: which candidates of
// each endpoint vertex are kept.
class Enumerator {
 public:
  Enumerator(const ProjectiveContext& ctx, const SemisimpleSequence& s, const EnumerationOptions& options)
      : ctx_(ctx), s_(s), options_(options), quiver_(ctx.algebra().quiver()) {}

  void check() const {
    const std::size_t n = quiver_.vertex_count();
    if (s_.depth() != ctx_.algebra().loewy_bound() + 1) {
      fail(ErrorCode::InvalidSequence, "sequence must have " + std::to_string(ctx_.algebra().loewy_bound() + 1) + " layers");
    }
    for (const auto& layer : s_.layers) {
      if (layer.size() != n) fail(ErrorCode::InvalidSequence, "sequence layer has the wrong number of entries");
    }
    const DimensionVector mult = ctx_.slot_multiplicities();
    for (std::size_t v = 0; v < n; ++v) {
      const bool fits = ctx_.setting() == Setting::Big ? s_.top()[v] <= mult[v] : s_.top()[v] == mult[v];
      if (!fits) fail(ErrorCode::InvalidSequence, "top of the sequence does not match the slots of the context");
    }
  }

  // Every admissible choice of roots.
  std::vector<std::vector<ModPath>> root_choices() const {
    std::vector<std::vector<std::size_t>> per_vertex(quiver_.vertex_count());
    for (std::size_t r = 0; r < ctx_.slot_count(); ++r) per_vertex[ctx_.slot_vertex(r).index].push_back(r);
    std::vector<std::vector<ModPath>> groups(quiver_.vertex_count());
    for (std::size_t v = 0; v < per_vertex.size(); ++v)
      for (auto r : per_vertex[v]) groups[v].push_back(ModPath{r, Path::trivial(ctx_.slot_vertex(r))});
    if (ctx_.setting() == Setting::Big && options_.dedupe) {
      for (std::size_t v = 0; v < groups.size(); ++v) groups[v].resize(s_.top()[v]);
    }
    std::vector<std::vector<ModPath>> out;
    choose(groups, s_.top(), [&](std::vector<ModPath> chosen) { out.push_back(std::move(chosen)); });
    return out;
  }

  void descend(std::vector<ModPath>& sigma, std::size_t level, const std::vector<ModPath>& previous,
               const std::function<void(const Skeleton&)>& visit) const {
    if (level == s_.depth()) {
      Skeleton sk(sigma);
      if (options_.dedupe && canonical_relabeling(sk, ctx_) != sk) return;
      visit(sk);
      return;
    }
    std::vector<std::vector<ModPath>> groups(quiver_.vertex_count());
    for (const auto& p : previous) {
      for (ArrowId a : quiver_.outgoing(p.target())) {
        ModPath q{p.slot, quiver_.extend(p.path, a)};
        groups[q.target().index].push_back(std::move(q));
      }
    }
    choose(groups, s_.layers[level], [&](std::vector<ModPath> chosen) {
      if (options_.filter && !options_.filter(level, chosen)) return;
      const std::size_t mark = sigma.size();
      sigma.insert(sigma.end(), chosen.begin(), chosen.end());
      descend(sigma, level + 1, chosen, visit);
      sigma.resize(mark);
    });
  }

  bool accept_roots(const std::vector<ModPath>& roots) const { return !options_.filter || options_.filter(0, roots); }

 private:
  // Cartesian product over vertices of k_v-subsets of each group, with each
  // subset in lexicographic index order. The chosen paths are passed sorted.
  template <typename Emit>
  static void choose(const std::vector<std::vector<ModPath>>& groups, const DimensionVector& counts, Emit&& emit) {
    for (std::size_t v = 0; v < groups.size(); ++v)
      if (groups[v].size() < counts[v]) return;
    std::vector<std::vector<std::size_t>> picks(groups.size());
    for (std::size_t v = 0; v < groups.size(); ++v) {
      picks[v].resize(counts[v]);
      for (std::size_t k = 0; k < counts[v]; ++k) picks[v][k] = k;
    }
    while (true) {
      std::vector<ModPath> chosen;
      for (std::size_t v = 0; v < groups.size(); ++v)
        for (auto i : picks[v]) chosen.push_back(groups[v][i]);
      std::sort(chosen.begin(), chosen.end());
      emit(std::move(chosen));
      // Advance the last vertex's combination first, odometer style.
      std::size_t v = groups.size();
      while (v > 0) {
        --v;
        if (next_combination(picks[v], groups[v].size())) break;
        for (std::size_t k = 0; k < picks[v].size(); ++k) picks[v][k] = k;
        if (v == 0) return;
      }
      if (groups.empty()) return;
    }
  }

  static bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i > 0; --i) {
      if (c[i - 1] < n - k + (i - 1)) {
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
        return true;
      }
    }
    return false;
  }

  const ProjectiveContext& ctx_;
  const SemisimpleSequence& s_;
  const EnumerationOptions& options_;
  const Quiver& quiver_;
};

}  // namespace

void for_each_skeleton(const ProjectiveContext& ctx, const SemisimpleSequence& s, const EnumerationOptions& options,
                       const std::function<void(const Skeleton&)>& visit) {
  Enumerator e(ctx, s, options);
  e.check();
  for (const auto& roots : e.root_choices()) {
    if (!e.accept_roots(roots)) continue;
    std::vector<ModPath> sigma = roots;
    e.descend(sigma, 1, roots, visit);
  }
}

std::vector<Skeleton> enumerate_skeleta(const ProjectiveContext& ctx, const SemisimpleSequence& s,
                                        const EnumerationOptions& options) {
  Enumerator e(ctx, s, options);
  e.check();
  std::vector<std::vector<ModPath>> prefixes;
  for (auto& roots : e.root_choices()) {
    if (e.accept_roots(roots)) prefixes.push_back(std::move(roots));
  }
  const std::size_t workers = std::max<std::size_t>(1, std::min(options.parallel, prefixes.size()));
  std::vector<std::vector<Skeleton>> found(workers);
  auto run = [&](std::size_t w) {
    for (std::size_t i = w; i < prefixes.size(); i += workers) {
      std::vector<ModPath> sigma = prefixes[i];
      e.descend(sigma, 1, prefixes[i], [&](const Skeleton& sk) { found[w].push_back(sk); });
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }
  std::vector<Skeleton> out;
  for (auto& f : found) out.insert(out.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t CriticalData::find(const ModPath& p) const {
  auto it = critical_index.find(p);
  return it == critical_index.end() ? npos : it->second;
}

std::size_t CriticalData::variable(std::size_t critical_idx, const ModPath& sigma) const {
  auto it = variable_index.find({critical_idx, sigma});
  return it == variable_index.end() ? npos : it->second;
}

CriticalData critical_data(const Skeleton& sigma, const ProjectiveContext& ctx) {
  std::string reason;
  if (!is_skeleton(sigma, ctx, &reason)) fail(ErrorCode::InvalidSkeleton, reason);
  const Quiver& quiver = ctx.algebra().quiver();
  const std::size_t bound = ctx.algebra().loewy_bound();

  std::vector<ModPath> positive;
  for (const auto& p : sigma) {
    if (p.length() >= bound) continue;
    for (ArrowId a : quiver.outgoing(p.target())) {
      ModPath q{p.slot, quiver.extend(p.path, a)};
      if (!sigma.contains(q)) positive.push_back(std::move(q));
    }
  }
  std::sort(positive.begin(), positive.end());
  std::vector<ModPath> roots;
  if (ctx.setting() == Setting::Big) {
    for (std::size_t r = 0; r < ctx.slot_count(); ++r) {
      ModPath root{r, Path::trivial(ctx.slot_vertex(r))};
      if (!sigma.contains(root)) roots.push_back(std::move(root));
    }
  }

  CriticalData data;
  auto add = [&](ModPath u) {
    CriticalPath c{std::move(u), {}};
    for (const auto& q : sigma) {
      if (q.length() >= c.path.length() && q.target() == c.path.target()) c.sigma_set.push_back(q);
    }
    const std::size_t idx = data.critical.size();
    data.critical_index.emplace(c.path, idx);
    for (const auto& q : c.sigma_set) {
      data.variable_index.emplace(std::make_pair(idx, q), data.variables.size());
      data.variables.push_back(CriticalVariable{idx, q});
    }
    data.critical.push_back(std::move(c));
  };
  for (auto& u : positive) add(std::move(u));
  data.n1 = data.variables.size();
  for (auto& u : roots) add(std::move(u));
  return data;
}

InvarianceReport n_invariance_check(const ProjectiveContext& ctx, const SemisimpleSequence& s) {
  InvarianceReport report;
  for_each_skeleton(ctx, s, {}, [&](const Skeleton& sk) {
    ++report.skeleta;
    report.n_values.insert(critical_data(sk, ctx).size());
  });
  report.holds = report.n_values.size() <= 1;
  return report;
}

}  // namespace qg
