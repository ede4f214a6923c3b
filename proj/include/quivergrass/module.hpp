#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quivergrass/algebra.hpp"
#include "quivergrass/linalg.hpp"
#include "quivergrass/quiver.hpp"

namespace qg {

struct TopElement {
  VertexId vertex;
  Vec vector;  // coordinates in the space at `vertex`
};

// Finite-dimensional representation: one vector space per vertex and one
// matrix per arrow, of shape dim(target) x dim(source).
struct ModuleRealization {
  std::vector<std::size_t> vertex_dims;
  std::vector<Matrix> arrow_maps;
  std::vector<TopElement> tops;

  std::size_t dimension() const;
  bool operator==(const ModuleRealization& other) const {
    return vertex_dims == other.vertex_dims && arrow_maps == other.arrow_maps;
  }
};

// Raises DimensionMismatch when the matrix shapes disagree with the quiver.
void check_shape(const ModuleRealization& m, const Quiver& quiver);

// Matrix of the path acting from the space at its source to the space at its target.
Matrix path_map(const ModuleRealization& m, const Path& p);

struct RelationWitness {
  std::size_t relation;   // index into the algebra's effective relations
  VertexId vertex;        // source vertex of the relation
  std::size_t basis_index;  // basis vector not annihilated
};

// Checks that every effective relation acts as zero. Returns a witness for the
// first violation.
std::optional<RelationWitness> relations_check(const ModuleRealization& m, const Algebra& algebra);

// A vertex-graded subspace: one row space per vertex.
using GradedSubspace = std::vector<RowSpace>;

GradedSubspace whole_space(const ModuleRealization& m);
GradedSubspace zero_subspace(const ModuleRealization& m);
std::vector<std::size_t> graded_dims(const GradedSubspace& u);
// Sum over arrows of the images of u.
GradedSubspace radical_of(const Quiver& quiver, const ModuleRealization& m, const GradedSubspace& u);
// Smallest submodule containing the given elements.
GradedSubspace submodule_closure(const Quiver& quiver, const ModuleRealization& m, GradedSubspace u);

// Realization of a submodule in its reduced echelon basis.
ModuleRealization restrict_to(const Quiver& quiver, const ModuleRealization& m, const GradedSubspace& u);
// Realization of m / u in the basis of non-pivot coordinates.
ModuleRealization quotient_by(const Quiver& quiver, const ModuleRealization& m, const GradedSubspace& u);

}  // namespace qg
