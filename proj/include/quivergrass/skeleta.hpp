#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "quivergrass/algebra.hpp"
#include "quivergrass/quiver.hpp"
#include "quivergrass/sequence.hpp"

namespace qg {

// Small: one slot per simple summand of a fixed top, every slot root is in
// each skeleton. Big: one slot per simple summand of a dimension vector d,
// a skeleton uses only some roots. General: an arbitrary projective with
// every root present (used for modules given with a full set of tops).
enum class Setting { Small, Big, General };

std::string_view to_string(Setting s);

class ProjectiveContext {
 public:
  static ProjectiveContext small(std::shared_ptr<const Algebra> algebra, const DimensionVector& top);
  static ProjectiveContext big(std::shared_ptr<const Algebra> algebra, const DimensionVector& d);
  static ProjectiveContext general(std::shared_ptr<const Algebra> algebra, std::vector<VertexId> slot_vertices);

  const Algebra& algebra() const { return *algebra_; }
  std::shared_ptr<const Algebra> algebra_ptr() const { return algebra_; }
  Setting setting() const { return setting_; }
  const std::vector<VertexId>& slot_vertices() const { return slots_; }
  std::size_t slot_count() const { return slots_.size(); }
  VertexId slot_vertex(std::size_t r) const { return slots_.at(r); }
  // Number of slots normed by each vertex.
  DimensionVector slot_multiplicities() const;

 private:
  ProjectiveContext(std::shared_ptr<const Algebra> algebra, Setting setting, std::vector<VertexId> slots);

  std::shared_ptr<const Algebra> algebra_;
  Setting setting_;
  std::vector<VertexId> slots_;
};

// A finite set of slot paths kept sorted in canonical ModPath order.
class Skeleton {
 public:
  Skeleton() = default;
  explicit Skeleton(std::vector<ModPath> paths);

  const std::vector<ModPath>& paths() const { return paths_; }
  std::size_t size() const { return paths_.size(); }
  bool contains(const ModPath& p) const;
  std::vector<ModPath> layer(std::size_t length) const;

  auto begin() const { return paths_.begin(); }
  auto end() const { return paths_.end(); }

  auto operator<=>(const Skeleton& other) const { return paths_ <=> other.paths_; }
  bool operator==(const Skeleton& other) const = default;

 private:
  std::vector<ModPath> paths_;
};

// Checks closure under initial subpaths, the length bound, slot norming and,
// outside the big setting, presence of every slot root. On failure the reason
// is stored when requested.
bool is_skeleton(const Skeleton& sigma, const ProjectiveContext& ctx, std::string* reason = nullptr);

// Number of paths of each length ending at each vertex.
SemisimpleSequence compatible_sequence(const Skeleton& sigma, const ProjectiveContext& ctx);

// Returns the lexicographically minimal skeleton among all relabelings of
// slots that preserve norming vertices.
Skeleton canonical_relabeling(const Skeleton& sigma, const ProjectiveContext& ctx);

// Optional pruning hook: called with the level and the paths chosen at that
// level (all earlier levels already accepted). Returning false discards the branch.
using LevelFilter = std::function<bool(std::size_t level, const std::vector<ModPath>& chosen)>;

struct EnumerationOptions {
  bool dedupe = false;
  std::size_t parallel = 1;
  LevelFilter filter;  // must be safe to call concurrently when parallel > 1
};

// All skeleta compatible with s, sorted. Raises InvalidSequence when s has the
// wrong shape or its top does not fit the context's slots.
std::vector<Skeleton> enumerate_skeleta(const ProjectiveContext& ctx, const SemisimpleSequence& s,
                                        const EnumerationOptions& options = {});

// Streaming variant of enumerate_skeleta; visits in depth-first order.
void for_each_skeleton(const ProjectiveContext& ctx, const SemisimpleSequence& s, const EnumerationOptions& options,
                       const std::function<void(const Skeleton&)>& visit);

struct CriticalPath {
  ModPath path;
  std::vector<ModPath> sigma_set;  // paths of sigma at least as long, same endpoint
};

struct CriticalVariable {
  std::size_t critical;  // index into CriticalData::critical
  ModPath sigma;
};

// Critical paths and the index set N of the affine coordinates.
// Positive-length critical paths come first in canonical order, followed in
// the big setting by the absent slot roots. Variables are ordered by critical
// path, then by sigma path, so the N1 variables form a prefix.
struct CriticalData {
  std::vector<CriticalPath> critical;
  std::vector<CriticalVariable> variables;
  std::size_t n1 = 0;

  std::size_t size() const { return variables.size(); }
  std::size_t n0() const { return variables.size() - n1; }
  // Index of a critical path, or npos.
  std::size_t find(const ModPath& p) const;
  // Index of the variable X_{critical, sigma}, or npos.
  std::size_t variable(std::size_t critical_index, const ModPath& sigma) const;

  std::map<ModPath, std::size_t> critical_index;
  std::map<std::pair<std::size_t, ModPath>, std::size_t> variable_index;
};

CriticalData critical_data(const Skeleton& sigma, const ProjectiveContext& ctx);

struct InvarianceReport {
  bool holds = true;
  std::size_t skeleta = 0;
  std::set<std::size_t> n_values;
};

// Compares |N| across all skeleta compatible with s.
InvarianceReport n_invariance_check(const ProjectiveContext& ctx, const SemisimpleSequence& s);

}  // namespace qg
