#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qg {

// Multiplicities of the simple modules, indexed by vertex.
using DimensionVector = std::vector<std::size_t>;

// Radical layering data: layers[l] is the dimension vector of J^l M / J^{l+1} M.
// Always dense with loewy_bound + 1 layers once validated against an algebra.
struct SemisimpleSequence {
  std::vector<DimensionVector> layers;

  std::size_t depth() const { return layers.size(); }
  const DimensionVector& top() const { return layers.front(); }
  std::size_t total() const;
  DimensionVector dimension_vector() const;

  bool operator==(const SemisimpleSequence&) const = default;
};

// "[[a,b],[c,d]]" style rendering, also accepted by the parser in io.hpp.
std::string format_sequence(const SemisimpleSequence& s);

}  // namespace qg
