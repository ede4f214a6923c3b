#include "quivergrass/quiver.hpp"

#include <algorithm>

#include "quivergrass/error.hpp"

namespace qg {

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  if (auto c = a.source <=> b.source; c != 0) return c;
  return std::lexicographical_compare_three_way(a.arrows.begin(), a.arrows.end(), b.arrows.begin(), b.arrows.end());
}

std::strong_ordering operator<=>(const ModPath& a, const ModPath& b) {
  if (auto c = a.slot <=> b.slot; c != 0) return c;
  return a.path <=> b.path;
}

Quiver::Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows)
    : vertex_names_(std::move(vertex_names)), arrows_(std::move(arrows)), outgoing_(vertex_names_.size()) {
  for (std::uint32_t i = 0; i < vertex_names_.size(); ++i) {
    if (!vertex_index_.emplace(vertex_names_[i], i).second) {
      fail(ErrorCode::ParseError, "duplicate vertex identifier '" + vertex_names_[i] + "'");
    }
  }
  for (std::uint32_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    if (a.source.index >= vertex_names_.size() || a.target.index >= vertex_names_.size()) {
      fail(ErrorCode::EndpointMismatch, "arrow '" + a.name + "' references an unknown vertex");
    }
    if (!arrow_index_.emplace(a.name, i).second) {
      fail(ErrorCode::ParseError, "duplicate arrow identifier '" + a.name + "'");
    }
    outgoing_[a.source.index].push_back(ArrowId{i});
  }
}

VertexId Quiver::vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) fail(ErrorCode::ParseError, "unknown vertex '" + name + "'");
  return VertexId{it->second};
}

ArrowId Quiver::arrow_id(const std::string& name) const {
  auto it = arrow_index_.find(name);
  if (it == arrow_index_.end()) fail(ErrorCode::ParseError, "unknown arrow '" + name + "'");
  return ArrowId{it->second};
}

Path Quiver::path(VertexId source, const std::vector<ArrowId>& arrows) const {
  Path p = Path::trivial(source);
  for (ArrowId a : arrows) p = extend(p, a);
  return p;
}

Path Quiver::path(const std::vector<std::string>& arrow_names) const {
  if (arrow_names.empty()) fail(ErrorCode::EndpointMismatch, "a trivial path needs an explicit source vertex");
  return path(arrow(arrow_id(arrow_names.front())).source, arrow_names);
}

Path Quiver::path(VertexId source, const std::vector<std::string>& arrow_names) const {
  Path p = Path::trivial(source);
  for (const auto& name : arrow_names) p = extend(p, arrow_id(name));
  return p;
}

Path Quiver::extend(const Path& p, ArrowId a) const {
  const Arrow& arr = arrow(a);
  if (arr.source != p.target) {
    fail(ErrorCode::EndpointMismatch, "arrow '" + arr.name + "' does not start where the path ends");
  }
  Path out = p;
  out.arrows.push_back(a);
  out.target = arr.target;
  return out;
}

std::string Quiver::format(const Path& p) const {
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += '.';
    out += arrow(p.arrows[i]).name;
  }
  return out;
}

std::string Quiver::format(const ModPath& p) const {
  std::string out = std::to_string(p.slot + 1) + ":";
  if (!p.path.is_trivial()) out += " " + format(p.path);
  return out;
}

bool Quiver::operator==(const Quiver& other) const {
  if (vertex_names_ != other.vertex_names_ || arrows_.size() != other.arrows_.size()) return false;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].name != other.arrows_[i].name || arrows_[i].source != other.arrows_[i].source ||
        arrows_[i].target != other.arrows_[i].target) {
      return false;
    }
  }
  return true;
}

Path compose(const Path& p, const Path& q) {
  if (p.source != q.target) fail(ErrorCode::EndpointMismatch, "cannot compose: source of p differs from target of q");
  Path out{q.source, p.target, q.arrows};
  out.arrows.insert(out.arrows.end(), p.arrows.begin(), p.arrows.end());
  return out;
}

std::vector<Path> initial_subpaths(const Quiver& quiver, const Path& p) {
  std::vector<Path> out;
  out.reserve(p.length() + 1);
  out.push_back(Path::trivial(p.source));
  for (ArrowId a : p.arrows) out.push_back(quiver.extend(out.back(), a));
  return out;
}

std::vector<Path> paths_up_to_length(const Quiver& quiver, VertexId source, std::size_t max_length) {
  std::vector<Path> out{Path::trivial(source)};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (ArrowId a : quiver.outgoing(out[i].target)) out.push_back(quiver.extend(out[i], a));
    }
    level_begin = level_end;
  }
  return out;
}

std::vector<Path> paths_of_length(const Quiver& quiver, std::size_t length) {
  std::vector<Path> out;
  for (std::uint32_t v = 0; v < quiver.vertex_count(); ++v) {
    for (auto& p : paths_up_to_length(quiver, VertexId{v}, length)) {
      if (p.length() == length) out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace qg
