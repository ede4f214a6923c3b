#include "quivergrass/layering.hpp"

#include <numeric>

#include "quivergrass/error.hpp"

namespace qg {

std::size_t SemisimpleSequence::total() const {
  std::size_t t = 0;
  for (const auto& l : layers) t += std::accumulate(l.begin(), l.end(), std::size_t{0});
  return t;
}

DimensionVector SemisimpleSequence::dimension_vector() const {
  DimensionVector d(layers.empty() ? 0 : layers.front().size(), 0);
  for (const auto& l : layers)
    for (std::size_t i = 0; i < l.size(); ++i) d[i] += l[i];
  return d;
}

std::string format_sequence(const SemisimpleSequence& s) {
  std::string out = "[";
  for (std::size_t l = 0; l < s.layers.size(); ++l) {
    if (l) out += ",";
    out += "[";
    for (std::size_t i = 0; i < s.layers[l].size(); ++i) {
      if (i) out += ",";
      out += std::to_string(s.layers[l][i]);
    }
    out += "]";
  }
  return out + "]";
}

bool dominates(const SemisimpleSequence& upper, const SemisimpleSequence& lower) {
  if (upper.depth() != lower.depth()) fail(ErrorCode::DimensionMismatch, "sequences have different numbers of layers");
  if (upper.depth() == 0) return true;
  const std::size_t n = upper.layers.front().size();
  std::vector<long long> up(n, 0), low(n, 0);
  for (std::size_t l = 0; l < upper.depth(); ++l) {
    if (upper.layers[l].size() != n || lower.layers[l].size() != n) {
      fail(ErrorCode::DimensionMismatch, "layers have different vertex counts");
    }
    for (std::size_t i = 0; i < n; ++i) {
      up[i] += static_cast<long long>(upper.layers[l][i]);
      low[i] += static_cast<long long>(lower.layers[l][i]);
      if (up[i] < low[i]) return false;
    }
  }
  return true;
}

SequenceCheck validate_sequence(const SemisimpleSequence& s, const Algebra& algebra) {
  const std::size_t n = algebra.quiver().vertex_count();
  const std::size_t depth = algebra.loewy_bound() + 1;
  if (s.depth() != depth) {
    return {false, "expected " + std::to_string(depth) + " layers, got " + std::to_string(s.depth())};
  }
  for (std::size_t l = 0; l < depth; ++l) {
    if (s.layers[l].size() != n) {
      return {false, "layer " + std::to_string(l) + " has " + std::to_string(s.layers[l].size()) +
                         " entries for " + std::to_string(n) + " vertices"};
    }
  }
  std::vector<VertexId> slots;
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::size_t k = 0; k < s.top()[v]; ++k) slots.push_back(VertexId{v});
  const SemisimpleSequence cover = projective_radical_layers(algebra, slots);
  for (std::size_t l = 1; l < depth; ++l) {
    for (std::size_t i = 0; i < n; ++i) {
      if (s.layers[l][i] > cover.layers[l][i]) {
        return {false, "layer " + std::to_string(l) + " at vertex '" + algebra.quiver().vertex_name(VertexId{static_cast<std::uint32_t>(i)}) +
                           "' exceeds the projective cover of the top (" + std::to_string(s.layers[l][i]) + " > " +
                           std::to_string(cover.layers[l][i]) + ")"};
      }
    }
  }
  return {};
}

SemisimpleSequence normalize_depth(SemisimpleSequence s, std::size_t loewy_bound) {
  const std::size_t n = s.layers.empty() ? 0 : s.layers.front().size();
  while (s.layers.size() > loewy_bound + 1) {
    const auto& last = s.layers.back();
    if (std::accumulate(last.begin(), last.end(), std::size_t{0}) != 0) break;
    s.layers.pop_back();
  }
  while (s.layers.size() < loewy_bound + 1) s.layers.emplace_back(n, 0);
  return s;
}

SemisimpleSequence radical_layering(const Quiver& quiver, const ModuleRealization& m, std::size_t min_depth) {
  check_shape(m, quiver);
  SemisimpleSequence s;
  GradedSubspace current = whole_space(m);
  for (std::size_t guard = 0; guard <= m.dimension() + min_depth + 1; ++guard) {
    GradedSubspace next = radical_of(quiver, m, current);
    DimensionVector layer;
    bool empty = true;
    for (std::size_t v = 0; v < current.size(); ++v) {
      layer.push_back(current[v].dim() - next[v].dim());
      if (current[v].dim() != 0) empty = false;
    }
    if (empty && s.depth() >= min_depth) return s;
    s.layers.push_back(std::move(layer));
    current = std::move(next);
  }
  fail(ErrorCode::InvalidModule, "radical filtration does not terminate; some cycle acts non-nilpotently");
}

SemisimpleSequence layering_of(const ModuleRealization& m, const Algebra& algebra) {
  if (auto w = relations_check(m, algebra)) {
    fail(ErrorCode::InvalidModule, "relation " + std::to_string(w->relation + 1) + " does not act as zero");
  }
  SemisimpleSequence s = radical_layering(algebra.quiver(), m, algebra.loewy_bound() + 1);
  if (s.depth() > algebra.loewy_bound() + 1) fail(ErrorCode::InvalidModule, "module exceeds the Loewy bound");
  return s;
}

}  // namespace qg
