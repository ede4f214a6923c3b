#pragma once

#include <string>
#include <vector>

#include "quivergrass/algebra.hpp"
#include "quivergrass/degeneration.hpp"
#include "quivergrass/equations.hpp"
#include "quivergrass/module.hpp"
#include "quivergrass/skeleta.hpp"

namespace qg {

// Algebra files are JSON objects with exactly the keys vertices, arrows,
// loewy_bound and relations. Relations are lists of {"coeff": "p/q",
// "path": [arrow names in traversal order]}.
Algebra parse_algebra(const std::string& json_text);
std::string format_algebra(const Algebra& algebra);

// "[[1,0],[0,2]]"
SemisimpleSequence parse_sequence(const std::string& text);

// Skeleton files: directive comments "# setting:" and "# slots:" followed by
// skeleta separated by "# skeleton k" lines, one path per line as "r: a.b"
// with slots counted from 1 and "r:" for a root.
struct SkeletonFile {
  Setting setting = Setting::Small;
  std::vector<VertexId> slots;
  std::vector<Skeleton> skeleta;
};
std::string format_skeleta(const std::vector<Skeleton>& skeleta, const ProjectiveContext& ctx);
SkeletonFile parse_skeleta(const std::string& text, const Quiver& quiver);
// Context recorded in a skeleton file.
ProjectiveContext context_of(const SkeletonFile& file, std::shared_ptr<const Algebra> algebra);

std::string format_ideal_text(const SigmaIdeal& ideal, const CriticalData& crit, const Quiver& quiver);
std::string format_ideal_json(const SigmaIdeal& ideal, const CriticalData& crit, const Quiver& quiver);
// Reads generators back from the text form.
std::vector<Polynomial> parse_ideal_text(const std::string& text);

// {"values": ["p/q" or null, ...], "default": "zero"}; with the default
// present, null entries become explicit zeros.
PointData parse_point(const std::string& json_text);
std::string format_point(const PointData& point);

std::string format_module(const ModuleRealization& m, const Quiver& quiver);
ModuleRealization parse_module(const std::string& text, const Quiver& quiver);

// {"slots": [vertex names], "generators": [[{"coeff", "slot", "path"}...]...]}
struct SubmoduleFile {
  std::vector<VertexId> slots;
  std::vector<std::vector<std::pair<Rational, ModPath>>> generators;
};
SubmoduleFile parse_submodule(const std::string& json_text, const Quiver& quiver);
SubmodulePresentation to_presentation(const SubmoduleFile& file, const ProjectiveModel& model);

// Curves: lines "r: coeff(t) * a.b -> j; ..." per slot, curves separated by "---".
std::vector<UnipotentCurve> parse_curves(const std::string& text, const Quiver& quiver,
                                         const std::vector<VertexId>& slots);
std::string format_curve(const UnipotentCurve& curve, const Quiver& quiver);

}  // namespace qg
