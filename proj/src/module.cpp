#include "quivergrass/module.hpp"

#include <numeric>

#include "quivergrass/error.hpp"

namespace qg {

std::size_t ModuleRealization::dimension() const {
  return std::accumulate(vertex_dims.begin(), vertex_dims.end(), std::size_t{0});
}

void check_shape(const ModuleRealization& m, const Quiver& quiver) {
  if (m.vertex_dims.size() != quiver.vertex_count() || m.arrow_maps.size() != quiver.arrow_count()) {
    fail(ErrorCode::DimensionMismatch, "module does not match the quiver's vertex or arrow count");
  }
  for (std::uint32_t a = 0; a < quiver.arrow_count(); ++a) {
    const Arrow& arrow = quiver.arrow(ArrowId{a});
    const Matrix& x = m.arrow_maps[a];
    if (x.rows() != m.vertex_dims[arrow.target.index] || x.cols() != m.vertex_dims[arrow.source.index]) {
      fail(ErrorCode::DimensionMismatch, "matrix of arrow '" + arrow.name + "' has the wrong shape");
    }
  }
  for (const auto& t : m.tops) {
    if (t.vertex.index >= m.vertex_dims.size() || t.vector.size() != m.vertex_dims[t.vertex.index]) {
      fail(ErrorCode::DimensionMismatch, "top element has the wrong length");
    }
  }
}

Matrix path_map(const ModuleRealization& m, const Path& p) {
  Matrix out = Matrix::identity(m.vertex_dims.at(p.source.index));
  for (ArrowId a : p.arrows) out = m.arrow_maps.at(a.index) * out;
  return out;
}

std::optional<RelationWitness> relations_check(const ModuleRealization& m, const Algebra& algebra) {
  const Quiver& quiver = algebra.quiver();
  check_shape(m, quiver);
  const auto& effective = algebra.effective_relations();
  for (std::size_t i = 0; i < effective.size(); ++i) {
    // Right multiples vanish whenever the declared relations do.
    if (effective[i].origin == RelationOrigin::RightMultiple) continue;
    const Relation& rel = effective[i].relation;
    Matrix total(m.vertex_dims[rel.target().index], m.vertex_dims[rel.source().index]);
    for (const auto& t : rel.terms) {
      Matrix term = path_map(m, t.path);
      term *= t.coeff;
      total = total + term;
    }
    for (std::size_t c = 0; c < total.cols(); ++c) {
      if (!is_zero(total.column(c))) return RelationWitness{i, rel.source(), c};
    }
  }
  return std::nullopt;
}

GradedSubspace whole_space(const ModuleRealization& m) {
  GradedSubspace u;
  for (std::size_t d : m.vertex_dims) {
    RowSpace s(d);
    for (std::size_t i = 0; i < d; ++i) {
      Vec e(d);
      e[i] = 1;
      s.insert(std::move(e));
    }
    u.push_back(std::move(s));
  }
  return u;
}

GradedSubspace zero_subspace(const ModuleRealization& m) {
  GradedSubspace u;
  for (std::size_t d : m.vertex_dims) u.emplace_back(d);
  return u;
}

std::vector<std::size_t> graded_dims(const GradedSubspace& u) {
  std::vector<std::size_t> out;
  for (const auto& s : u) out.push_back(s.dim());
  return out;
}

GradedSubspace radical_of(const Quiver& quiver, const ModuleRealization& m, const GradedSubspace& u) {
  GradedSubspace out = zero_subspace(m);
  for (std::uint32_t a = 0; a < quiver.arrow_count(); ++a) {
    const Arrow& arrow = quiver.arrow(ArrowId{a});
    for (const auto& v : u[arrow.source.index].basis()) out[arrow.target.index].insert(m.arrow_maps[a] * v);
  }
  return out;
}

GradedSubspace submodule_closure(const Quiver& quiver, const ModuleRealization& m, GradedSubspace u) {
  std::vector<std::pair<std::uint32_t, Vec>> pending;
  for (std::uint32_t v = 0; v < u.size(); ++v)
    for (const auto& b : u[v].basis()) pending.emplace_back(v, b);
  while (!pending.empty()) {
    auto [v, vec] = std::move(pending.back());
    pending.pop_back();
    for (ArrowId a : quiver.outgoing(VertexId{v})) {
      const std::uint32_t t = quiver.arrow(a).target.index;
      Vec img = m.arrow_maps[a.index] * vec;
      if (u[t].insert(img)) pending.emplace_back(t, std::move(img));
    }
  }
  return u;
}

namespace {

// Coordinates of a vector of the subspace with respect to its reduced basis.
Vec echelon_coordinates(const RowSpace& s, const Vec& v) {
  Vec c(s.dim());
  for (std::size_t r = 0; r < s.dim(); ++r) c[r] = v[s.pivots()[r]];
  return c;
}

}  // namespace

ModuleRealization restrict_to(const Quiver& quiver, const ModuleRealization& m, const GradedSubspace& u) {
  ModuleRealization out;
  out.vertex_dims = graded_dims(u);
  for (std::uint32_t a = 0; a < quiver.arrow_count(); ++a) {
    const Arrow& arrow = quiver.arrow(ArrowId{a});
    const RowSpace& src = u[arrow.source.index];
    const RowSpace& tgt = u[arrow.target.index];
    Matrix x(tgt.dim(), src.dim());
    for (std::size_t j = 0; j < src.dim(); ++j) {
      Vec img = m.arrow_maps[a] * src.basis()[j];
      if (!tgt.contains(img)) fail(ErrorCode::InvalidModule, "subspace is not closed under arrow '" + arrow.name + "'");
      Vec c = echelon_coordinates(tgt, img);
      for (std::size_t i = 0; i < c.size(); ++i) x(i, j) = c[i];
    }
    out.arrow_maps.push_back(std::move(x));
  }
  return out;
}

ModuleRealization quotient_by(const Quiver& quiver, const ModuleRealization& m, const GradedSubspace& u) {
  std::vector<std::vector<std::size_t>> keep(m.vertex_dims.size());
  std::vector<std::vector<std::size_t>> position(m.vertex_dims.size());
  ModuleRealization out;
  for (std::size_t v = 0; v < m.vertex_dims.size(); ++v) {
    auto mask = u[v].pivot_mask();
    position[v].assign(m.vertex_dims[v], static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < m.vertex_dims[v]; ++i) {
      if (mask[i]) continue;
      position[v][i] = keep[v].size();
      keep[v].push_back(i);
    }
    out.vertex_dims.push_back(keep[v].size());
  }
  for (std::uint32_t a = 0; a < quiver.arrow_count(); ++a) {
    const Arrow& arrow = quiver.arrow(ArrowId{a});
    const auto s = arrow.source.index;
    const auto t = arrow.target.index;
    Matrix x(out.vertex_dims[t], out.vertex_dims[s]);
    for (std::size_t j = 0; j < keep[s].size(); ++j) {
      Vec img = u[t].reduce(m.arrow_maps[a].column(keep[s][j]));
      for (std::size_t i = 0; i < img.size(); ++i) {
        if (sgn(img[i]) != 0) x(position[t][i], j) = img[i];
      }
    }
    out.arrow_maps.push_back(std::move(x));
  }
  for (const auto& top : m.tops) {
    Vec reduced = u[top.vertex.index].reduce(top.vector);
    Vec local(out.vertex_dims[top.vertex.index]);
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      if (sgn(reduced[i]) != 0) local[position[top.vertex.index][i]] = reduced[i];
    }
    out.tops.push_back(TopElement{top.vertex, std::move(local)});
  }
  return out;
}

}  // namespace qg
