#pragma once

#include <optional>
#include <string>

#include "quivergrass/algebra.hpp"
#include "quivergrass/module.hpp"
#include "quivergrass/sequence.hpp"

namespace qg {

// Componentwise comparison of the partial sums sum_{j<=l} S'_j >= sum_{j<=l} S_j
// for every l. Raises DimensionMismatch on differing shapes.
bool dominates(const SemisimpleSequence& upper, const SemisimpleSequence& lower);

struct SequenceCheck {
  bool ok = true;
  std::string reason;
};

// Checks shape (L + 1 layers, one entry per vertex) and that every layer fits
// into the corresponding radical layer of the projective cover of the top.
SequenceCheck validate_sequence(const SemisimpleSequence& s, const Algebra& algebra);

// Pads or trims trailing zero layers so the sequence has L + 1 layers.
SemisimpleSequence normalize_depth(SemisimpleSequence s, std::size_t loewy_bound);

// Radical layering computed from J^{l+1} M = sum_a X_a(J^l M). Raises
// InvalidModule if m violates a relation.
SemisimpleSequence layering_of(const ModuleRealization& m, const Algebra& algebra);

// Same computation without the relation check; the result has as many layers
// as needed for J^l M to vanish, at least `min_depth`.
SemisimpleSequence radical_layering(const Quiver& quiver, const ModuleRealization& m, std::size_t min_depth);

}  // namespace qg
