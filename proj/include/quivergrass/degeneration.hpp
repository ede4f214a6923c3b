#pragma once

#include <cstddef>
#include <stop_token>
#include <vector>

#include "quivergrass/algebra.hpp"
#include "quivergrass/layering.hpp"
#include "quivergrass/module.hpp"
#include "quivergrass/realize.hpp"
#include "quivergrass/univariate.hpp"

namespace qg {

struct CurveTerm {
  RationalFunction coeff;
  Path path;               // from the vertex of target_slot to the vertex of the owning slot
  std::size_t target_slot;
};

// g_tau(z_r) = z_r + sum over the slot's terms of coeff(tau) * path * z_target.
// Every path has positive length, so g_tau is unipotent.
struct UnipotentCurve {
  std::vector<std::vector<CurveTerm>> slot_terms;
};

// Raises InvalidCurve or EndpointMismatch.
void validate_curve(const UnipotentCurve& curve, const ProjectiveModel& model);

// A submodule of Q given by generators in global coordinates of the model.
struct SubmodulePresentation {
  std::vector<Vec> generators;
};

// Family of subspaces of Q over K(tau): polynomial rows that are linearly
// independent over K(tau).
struct SubspaceFamily {
  std::size_t ambient = 0;
  std::vector<std::vector<UPoly>> rows;
};

// Image of C under g_tau. Since g_tau is Lambda-linear, applying it to a
// K-basis of the submodule generated by C spans g_tau(C).
SubspaceFamily apply_curve(const UnipotentCurve& curve, const SubmodulePresentation& c, const ProjectiveModel& model);

// Limit of the family as tau goes to infinity, as a reduced echelon basis in
// global coordinates. Substitutes s = 1/tau and saturates the rows at s = 0.
// Raises RankDrop when the rows are not independent over K(tau), Cancelled
// when the token is triggered.
std::vector<Vec> limit_at_infinity(const SubspaceFamily& family, std::stop_token stop = {});

enum class DominanceVerdict { Equal, StrictlyDominates, Violates };
std::string_view to_string(DominanceVerdict v);

DominanceVerdict verify_dominance(const SemisimpleSequence& before, const SemisimpleSequence& after);
DominanceVerdict verify_dominance(const ModuleRealization& before, const ModuleRealization& after, const Algebra& algebra);

struct DegenerationReport {
  std::vector<Vec> limit;  // basis of the limit submodule C'
  ModuleRealization before;
  ModuleRealization after;
  SemisimpleSequence before_layers;
  SemisimpleSequence after_layers;
  DominanceVerdict verdict = DominanceVerdict::Equal;
  IsoResult iso;
};

DegenerationReport unipotent_degenerate(const ProjectiveModel& model, const SubmodulePresentation& c,
                                        const UnipotentCurve& curve, const IsoProbeOptions& iso_options = {},
                                        std::stop_token stop = {});

// Q / C for a submodule presentation, with tops at the slot generators.
ModuleRealization quotient_module(const ProjectiveModel& model, const SubmodulePresentation& c);

}  // namespace qg
