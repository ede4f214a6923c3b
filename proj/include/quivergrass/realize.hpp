#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quivergrass/algebra.hpp"
#include "quivergrass/equations.hpp"
#include "quivergrass/module.hpp"
#include "quivergrass/skeleta.hpp"

namespace qg {

// Position of every skeleton path in the per-vertex basis of a realization:
// skeleton paths ending at a vertex, in canonical order.
struct SkeletonBasis {
  std::map<ModPath, std::size_t> local;
  std::vector<std::size_t> vertex_dims;

  SkeletonBasis(const Skeleton& sigma, std::size_t vertex_count);
};

// The module with basis sigma in which an arrow sends p to a p when that path
// lies in sigma, to sum_q c_{a p, q} q when a p is critical, and to zero past
// the Loewy bound. Tops are the roots of sigma.
ModuleRealization realize_point(const Skeleton& sigma, const CriticalData& crit, const ProjectiveContext& ctx,
                                const PointData& point);

// Coordinates of m relative to sigma: for every critical path u, the
// coefficients of u applied to the tops in the basis given by sigma.
// Requires m.tops to hold one element per slot and sigma to be a skeleton of m.
PointData point_of_module(const Skeleton& sigma, const CriticalData& crit, const ProjectiveContext& ctx,
                          const ModuleRealization& m);

// All skeleta of m relative to its tops: skeleta whose length-l paths applied
// to the tops give a basis of J^l M modulo J^{l+1} M. The context supplies the
// slot vertices, which must match the tops. Raises InvalidTops when the tops
// are not a basis of M modulo JM.
std::vector<Skeleton> skeleta_of_module(const ModuleRealization& m, const ProjectiveContext& ctx,
                                        std::size_t parallel = 1);

// Basis of Hom(m, n); every element lists one matrix per vertex.
std::vector<std::vector<Matrix>> hom_basis(const Quiver& quiver, const ModuleRealization& m, const ModuleRealization& n);
std::size_t hom_dim(const Quiver& quiver, const ModuleRealization& m, const ModuleRealization& n);

// dim Hom(Q, JM) - dim Hom(M, JM), the dimension of the orbit of the
// unipotent radical of Aut(Q) on modules with projective cover Q.
std::size_t unipotent_orbit_dim(const ProjectiveContext& q, const ModuleRealization& m);

enum class IsoVerdict { Isomorphic, NotIsomorphic, Inconclusive };
std::string_view to_string(IsoVerdict v);

struct IsoProbeOptions {
  std::size_t trials = 32;
  std::uint64_t seed = 0;
  long numerator_bound = 10;   // numerators drawn from [-bound, bound]
  long denominator_bound = 10;  // denominators drawn from [1, bound]
};

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Inconclusive;
  std::string reason;
  std::vector<Matrix> witness;  // per-vertex isomorphism m -> n
  std::size_t trial = 0;        // 1-based trial that produced the witness
};

// Compares isomorphism invariants, then tries random elements of Hom(m, n)
// for invertibility.
IsoResult iso_probe(const Quiver& quiver, const ModuleRealization& m, const ModuleRealization& n,
                    const IsoProbeOptions& options = {});

// U(c): the submodule of Q generated by u - sum_q c_{u,q} q over all critical
// paths u, in per-vertex coordinates of the projective model.
GradedSubspace point_submodule(const CriticalData& crit, const ProjectiveModel& model, const PointData& point);

// Q / U expressed in the basis of the residues of sigma. Returns nothing when
// those residues are not a basis.
std::optional<ModuleRealization> quotient_in_skeleton_basis(const Skeleton& sigma, const ProjectiveModel& model,
                                                            const GradedSubspace& u);

// Splits global coordinates of the projective model into per-vertex pieces.
std::vector<Vec> split_by_vertex(const ProjectiveModel& model, const Vec& global);
GradedSubspace graded_span(const ProjectiveModel& model, const std::vector<Vec>& global_vectors);
// Smallest submodule of Q containing the given global vectors.
GradedSubspace submodule_generated(const ProjectiveModel& model, const std::vector<Vec>& global_vectors);
// Global coordinates of a reduced echelon basis of a graded subspace.
std::vector<Vec> global_basis(const ProjectiveModel& model, const GradedSubspace& u);

}  // namespace qg
