#pragma once

// Reference computations that avoid the library's own search and rewriting
// code, used to cross-check it.

#include <functional>
#include <map>
#include <vector>

#include "quivergrass/skeleta.hpp"

namespace oracle {

using namespace qg;

// All slot paths of length at most L, built by extending arrow by arrow.
inline std::vector<ModPath> candidate_paths(const ProjectiveContext& ctx) {
  const Quiver& q = ctx.algebra().quiver();
  std::vector<ModPath> out;
  for (std::size_t r = 0; r < ctx.slot_count(); ++r) {
    std::vector<Path> frontier{Path::trivial(ctx.slot_vertex(r))};
    for (std::size_t len = 0; len <= ctx.algebra().loewy_bound(); ++len) {
      std::vector<Path> next;
      for (const auto& p : frontier) {
        out.push_back(ModPath{r, p});
        for (std::uint32_t a = 0; a < q.arrow_count(); ++a) {
          if (q.arrow(ArrowId{a}).source != p.target) continue;
          Path e = p;
          e.arrows.push_back(ArrowId{a});
          e.target = q.arrow(ArrowId{a}).target;
          next.push_back(std::move(e));
        }
      }
      frontier = std::move(next);
    }
  }
  return out;
}

inline SemisimpleSequence count_layers(const std::vector<ModPath>& paths, std::size_t vertices, std::size_t depth) {
  SemisimpleSequence s;
  s.layers.assign(depth, DimensionVector(vertices, 0));
  for (const auto& p : paths) ++s.layers.at(p.length())[p.path.target.index];
  return s;
}

// Every set of candidate paths closed under dropping the last arrow. Roots
// are mandatory unless `roots_optional`. Visits each set once.
inline void for_each_closed_set(const ProjectiveContext& ctx, bool roots_optional,
                                const std::function<void(const std::vector<ModPath>&)>& visit) {
  const auto cands = candidate_paths(ctx);
  std::map<ModPath, std::size_t> index;
  for (std::size_t i = 0; i < cands.size(); ++i) index[cands[i]] = i;
  std::vector<std::size_t> parent(cands.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (cands[i].path.is_trivial()) continue;
    ModPath up = cands[i];
    up.path.arrows.pop_back();
    up.path.target = up.path.arrows.empty() ? up.path.source
                                            : ctx.algebra().quiver().arrow(up.path.arrows.back()).target;
    parent[i] = index.at(up);
  }
  std::vector<bool> in(cands.size(), false);
  std::vector<ModPath> chosen;
  // Candidates are listed parents first, so a single forward pass decides each one.
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == cands.size()) {
      visit(chosen);
      return;
    }
    const bool is_root = cands[i].path.is_trivial();
    const bool allowed = is_root || in[parent[i]];
    if (!(is_root && !roots_optional)) {
      walk(i + 1);  // leave out
    }
    if (allowed) {
      in[i] = true;
      chosen.push_back(cands[i]);
      walk(i + 1);
      chosen.pop_back();
      in[i] = false;
    }
  };
  walk(0);
}

// Brute-force list of the skeleta compatible with s, sorted.
inline std::vector<Skeleton> skeleta_by_subsets(const ProjectiveContext& ctx, const SemisimpleSequence& s) {
  std::vector<Skeleton> out;
  const std::size_t n = ctx.algebra().quiver().vertex_count();
  for_each_closed_set(ctx, ctx.setting() == Setting::Big, [&](const std::vector<ModPath>& set) {
    if (count_layers(set, n, s.depth()) == s) out.emplace_back(set);
  });
  std::sort(out.begin(), out.end());
  return out;
}

// |N| from the sequence alone: critical paths of length l ending at j number
// sum_i S_{l-1,i} * #arrows(i -> j) - S_{l,j}; each has as many substitution
// targets as there are skeleton paths of length >= l ending at j. In the big
// setting the absent roots at j are critical with every path ending at j.
inline std::size_t n_from_sequence(const ProjectiveContext& ctx, const SemisimpleSequence& s) {
  const Quiver& q = ctx.algebra().quiver();
  const std::size_t n = q.vertex_count();
  const std::size_t depth = s.depth();
  auto tail = [&](std::size_t l, std::size_t j) {
    std::size_t t = 0;
    for (std::size_t k = l; k < depth; ++k) t += s.layers[k][j];
    return t;
  };
  std::size_t total = 0;
  for (std::size_t l = 1; l < depth; ++l) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t ext = 0;
      for (const auto& a : q.arrows())
        if (a.target.index == j) ext += s.layers[l - 1][a.source.index];
      total += (ext - s.layers[l][j]) * tail(l, j);
    }
  }
  if (ctx.setting() == Setting::Big) {
    const auto mult = ctx.slot_multiplicities();
    for (std::size_t j = 0; j < n; ++j) total += (mult[j] - s.layers[0][j]) * tail(0, j);
  }
  return total;
}

}  // namespace oracle
