#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "quivergrass/polynomial.hpp"
#include "quivergrass/skeleta.hpp"

namespace qg {

// Element of the free K[X]-module on the slot paths of length at most L + 1.
using FreeElement = std::map<ModPath, Polynomial>;

FreeElement operator+(const FreeElement& a, const FreeElement& b);
FreeElement scale(const FreeElement& a, const Polynomial& p);

enum class ReductionStrategy {
  Canonical,   // always rewrite the smallest non-skeleton term
  DepthFirst,  // memoized recursive rewriting of each path
  Shuffled,    // rewrite a randomly chosen non-skeleton term
};

// Rewrites y into a combination of skeleton paths: a path u = u'' (a u')
// with u' its longest initial subpath in sigma is replaced by
// sum_q X_{a u', q} u'' q. Terms beyond the Loewy bound vanish.
FreeElement normal_form(const FreeElement& y, const Skeleton& sigma, const CriticalData& crit,
                        const ProjectiveContext& ctx, ReductionStrategy strategy = ReductionStrategy::Canonical,
                        std::uint64_t seed = 0);

struct IdealGenerator {
  Polynomial poly;
  std::size_t relation;  // index into the algebra's effective relations
  std::size_t slot;
  ModPath basis_path;    // skeleton path whose coefficient this is
};

// Generators of the affine ideal cutting out the skeleton's chart, one per
// nonzero coefficient of the normal form of rho z_r. Variables N0 (absent
// roots in the big setting) never occur and are reported as free.
struct SigmaIdeal {
  std::vector<IdealGenerator> generators;
  std::size_t variable_count = 0;
  std::size_t free_from = 0;  // variables with index >= free_from are free

  std::size_t free_count() const { return variable_count - free_from; }
};

SigmaIdeal sigma_ideal(const Skeleton& sigma, const CriticalData& crit, const ProjectiveContext& ctx,
                       std::size_t parallel = 1);

// Ideal of the big chart; in the small setting this equals sigma_ideal.
SigmaIdeal big_presentation(const Skeleton& sigma, const CriticalData& crit, const ProjectiveContext& ctx,
                            std::size_t parallel = 1);

// Coordinates of a point of the affine space indexed by N. A coordinate left
// unset is missing; with_zero_default fills all of them explicitly.
struct PointData {
  std::vector<std::optional<Rational>> values;

  static PointData zeros(std::size_t n);
  PointData with_zero_default() const;
  std::vector<Rational> dense() const;  // raises MissingCoordinate
};

bool evaluate_membership(const SigmaIdeal& ideal, const PointData& point);

}  // namespace qg
