#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "quivergrass/linalg.hpp"
#include "quivergrass/quiver.hpp"
#include "quivergrass/rational.hpp"
#include "quivergrass/sequence.hpp"

namespace qg {

struct ModuleRealization;

struct RelationTerm {
  Rational coeff;
  Path path;

  bool operator==(const RelationTerm&) const = default;
};

// A K-linear combination of paths sharing source and target.
struct Relation {
  std::vector<RelationTerm> terms;

  VertexId source() const { return terms.front().path.source; }
  VertexId target() const { return terms.front().path.target; }
  std::size_t min_length() const;
  std::size_t max_length() const;

  bool operator==(const Relation&) const = default;
};

enum class RelationOrigin { Declared, RightMultiple, LengthBound };

struct EffectiveRelation {
  Relation relation;
  RelationOrigin origin;
};

struct ValidationReport {
  std::size_t declared = 0;
  std::size_t right_multiples = 0;
  std::size_t length_bound_paths = 0;

  std::size_t effective() const { return declared + right_multiples + length_bound_paths; }
};

// The truncated path algebra K Gamma / I where I is the two-sided ideal
// generated by the declared relations together with all paths of length
// loewy_bound + 1. Construction validates the presentation.
class Algebra {
 public:
  Algebra(Quiver quiver, std::vector<Relation> relations, std::size_t loewy_bound);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::size_t loewy_bound() const { return loewy_bound_; }

  // Declared relations, their right multiples rho*v that still have a term of
  // length at most L (truncated to those terms), and the paths of length
  // L + 1. Together they generate I as a left ideal.
  const std::vector<EffectiveRelation>& effective_relations() const { return effective_; }
  const ValidationReport& report() const { return report_; }

  bool operator==(const Algebra& other) const;

 private:
  Quiver quiver_;
  std::vector<Relation> relations_;
  std::size_t loewy_bound_;
  std::vector<EffectiveRelation> effective_;
  ValidationReport report_;
};

ValidationReport validate(const Algebra& algebra);

// Direct sum of Lambda e(r) over slots r, modelled inside the span of all
// slot paths of length at most L. Spanning paths are eliminated against the
// relation multiples with the pivot on the shortest term, so the surviving
// paths form a basis adapted to the radical filtration.
class ProjectiveModel {
 public:
  ProjectiveModel(const Algebra& algebra, std::vector<VertexId> slot_vertices);

  const Algebra& algebra() const { return algebra_; }
  const std::vector<VertexId>& slot_vertices() const { return slot_vertices_; }
  std::size_t dimension() const { return basis_.size(); }

  // Basis paths ordered by length, then slot, then path.
  const std::vector<ModPath>& basis() const { return basis_; }
  VertexId vertex_of(std::size_t basis_index) const { return basis_[basis_index].path.target; }

  // Coordinates of the residue of p z_r; zero beyond the Loewy bound.
  Vec project(const ModPath& p) const;
  bool vanishes(const ModPath& p) const { return is_zero(project(p)); }

  // Coordinates of the arrow applied to a vector of this module.
  Vec act(ArrowId arrow, const Vec& v) const;
  Vec act(const Path& path, const Vec& v) const;

  ModuleRealization realization() const;
  SemisimpleSequence radical_layers() const;

  // Translation between global coordinates and the per-vertex coordinates
  // used by realization().
  std::size_t local_index(std::size_t basis_index) const { return local_index_[basis_index]; }
  const std::vector<std::size_t>& vertex_basis(VertexId v) const { return by_vertex_.at(v.index); }

 private:
  Algebra algebra_;
  std::vector<VertexId> slot_vertices_;
  std::vector<ModPath> spanning_;
  std::map<ModPath, std::size_t> spanning_index_;
  std::vector<ModPath> basis_;
  std::vector<std::size_t> basis_of_column_;  // basis index per spanning column, or npos
  RowSpace relations_;
  std::vector<std::size_t> local_index_;
  std::vector<std::vector<std::size_t>> by_vertex_;
  std::vector<std::vector<Vec>> arrow_images_;  // [arrow][basis index] when the arrow applies
};

// Realization of Lambda e(r) summed over the given slots, with tops at the
// slot generators.
ModuleRealization projective_realization(const Algebra& algebra, const std::vector<VertexId>& slot_vertices);
SemisimpleSequence projective_radical_layers(const Algebra& algebra, const std::vector<VertexId>& slot_vertices);

}  // namespace qg
