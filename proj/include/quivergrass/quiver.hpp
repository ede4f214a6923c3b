#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace qg {

struct VertexId {
  std::uint32_t index = 0;
  auto operator<=>(const VertexId&) const = default;
};

struct ArrowId {
  std::uint32_t index = 0;
  auto operator<=>(const ArrowId&) const = default;
};

struct Arrow {
  std::string name;
  VertexId source;
  VertexId target;
};

// A path stores its arrows in traversal order: arrows[0] is applied first.
// In multiplicative notation the path a1.a2.a3 is written a3 a2 a1.
struct Path {
  VertexId source;
  VertexId target;
  std::vector<ArrowId> arrows;

  static Path trivial(VertexId v) { return Path{v, v, {}}; }

  std::size_t length() const { return arrows.size(); }
  bool is_trivial() const { return arrows.empty(); }

  bool operator==(const Path&) const = default;
};

// Canonical order: length, then source, then arrow indices lexicographically.
std::strong_ordering operator<=>(const Path& a, const Path& b);

// A path p starting at the norming vertex of slot r, standing for p applied
// to the generator of that slot.
struct ModPath {
  std::size_t slot = 0;
  Path path;

  std::size_t length() const { return path.length(); }
  VertexId target() const { return path.target; }

  bool operator==(const ModPath&) const = default;
};

// Canonical order: slot, then the path order.
std::strong_ordering operator<=>(const ModPath& a, const ModPath& b);

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v.index); }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a.index); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }

  // Arrows leaving v in declaration order.
  const std::vector<ArrowId>& outgoing(VertexId v) const { return outgoing_.at(v.index); }

  VertexId vertex(const std::string& name) const;
  ArrowId arrow_id(const std::string& name) const;
  bool has_vertex(const std::string& name) const { return vertex_index_.count(name) != 0; }
  bool has_arrow(const std::string& name) const { return arrow_index_.count(name) != 0; }

  // Builds a path from arrows listed in traversal order, checking that
  // consecutive arrows meet.
  Path path(VertexId source, const std::vector<ArrowId>& arrows) const;
  Path path(const std::vector<std::string>& arrow_names) const;
  Path path(VertexId source, const std::vector<std::string>& arrow_names) const;

  // Appends one arrow after the path (multiplicatively: arrow * p).
  Path extend(const Path& p, ArrowId a) const;

  // Dot-separated arrow names in traversal order; empty for a trivial path.
  std::string format(const Path& p) const;
  std::string format(const ModPath& p) const;

  bool operator==(const Quiver& other) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<ArrowId>> outgoing_;
  std::unordered_map<std::string, std::uint32_t> vertex_index_;
  std::unordered_map<std::string, std::uint32_t> arrow_index_;
};

// The product p q: first q, then p. Requires source(p) == target(q).
Path compose(const Path& p, const Path& q);

// All initial subpaths of p from the trivial path up to p itself, shortest first.
std::vector<Path> initial_subpaths(const Quiver& quiver, const Path& p);

// All paths starting at `source` of length at most max_length, in canonical order.
std::vector<Path> paths_up_to_length(const Quiver& quiver, VertexId source, std::size_t max_length);

// All paths from every vertex of exactly the given length, in canonical order.
std::vector<Path> paths_of_length(const Quiver& quiver, std::size_t length);

}  // namespace qg
