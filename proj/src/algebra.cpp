#include "quivergrass/algebra.hpp"

#include <algorithm>
#include <set>

#include "quivergrass/error.hpp"
#include "quivergrass/module.hpp"

namespace qg {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

void validate_relation(const Quiver& quiver, const Relation& rel, std::size_t index, std::size_t bound) {
  const std::string where = "relation " + std::to_string(index + 1);
  if (rel.terms.empty()) fail(ErrorCode::ShortRelation, where + " has no terms");
  std::set<Path> seen;
  for (const auto& t : rel.terms) {
    if (sgn(t.coeff) == 0) fail(ErrorCode::NonNormedRelation, where + " has a zero coefficient");
    if (t.path.source != rel.source() || t.path.target != rel.target()) {
      fail(ErrorCode::NonNormedRelation, where + " mixes paths with different endpoints");
    }
    if (t.path.length() < 2) {
      fail(ErrorCode::ShortRelation, where + " contains the path '" + quiver.format(t.path) + "' of length < 2");
    }
    if (t.path.length() > bound) {
      fail(ErrorCode::LengthExceedsBound,
           where + " contains the path '" + quiver.format(t.path) + "' longer than the Loewy bound");
    }
    if (!seen.insert(t.path).second) {
      fail(ErrorCode::NonNormedRelation, where + " lists the path '" + quiver.format(t.path) + "' twice");
    }
  }
}

Relation sorted(Relation r) {
  std::sort(r.terms.begin(), r.terms.end(), [](const RelationTerm& a, const RelationTerm& b) { return a.path < b.path; });
  return r;
}

}  // namespace

std::size_t Relation::min_length() const {
  std::size_t m = npos;
  for (const auto& t : terms) m = std::min(m, t.path.length());
  return m;
}

std::size_t Relation::max_length() const {
  std::size_t m = 0;
  for (const auto& t : terms) m = std::max(m, t.path.length());
  return m;
}

Algebra::Algebra(Quiver quiver, std::vector<Relation> relations, std::size_t loewy_bound)
    : quiver_(std::move(quiver)), relations_(std::move(relations)), loewy_bound_(loewy_bound) {
  for (std::size_t i = 0; i < relations_.size(); ++i) validate_relation(quiver_, relations_[i], i, loewy_bound_);

  for (const auto& r : relations_) effective_.push_back({r, RelationOrigin::Declared});
  report_.declared = relations_.size();

  // Right multiples rho*v: v ends at the source of rho.
  std::set<std::vector<std::pair<Path, Rational>>> seen;
  for (const auto& r : relations_) {
    std::vector<std::pair<Path, Rational>> key;
    for (const auto& t : sorted(r).terms) key.emplace_back(t.path, t.coeff);
    seen.insert(key);
  }
  for (const auto& r : relations_) {
    if (r.min_length() >= loewy_bound_) continue;
    const std::size_t room = loewy_bound_ - r.min_length();
    for (std::uint32_t v = 0; v < quiver_.vertex_count(); ++v) {
      for (const auto& tail : paths_up_to_length(quiver_, VertexId{v}, room)) {
        if (tail.is_trivial() || tail.target != r.source()) continue;
        Relation product;
        for (const auto& t : r.terms) {
          Path p = compose(t.path, tail);
          if (p.length() <= loewy_bound_) product.terms.push_back({t.coeff, std::move(p)});
        }
        product = sorted(std::move(product));
        std::vector<std::pair<Path, Rational>> key;
        for (const auto& t : product.terms) key.emplace_back(t.path, t.coeff);
        if (!seen.insert(key).second) continue;
        effective_.push_back({std::move(product), RelationOrigin::RightMultiple});
        ++report_.right_multiples;
      }
    }
  }

  for (auto& p : paths_of_length(quiver_, loewy_bound_ + 1)) {
    effective_.push_back({Relation{{RelationTerm{Rational(1), std::move(p)}}}, RelationOrigin::LengthBound});
    ++report_.length_bound_paths;
  }
}

bool Algebra::operator==(const Algebra& other) const {
  return quiver_ == other.quiver_ && relations_ == other.relations_ && loewy_bound_ == other.loewy_bound_;
}

ValidationReport validate(const Algebra& algebra) { return algebra.report(); }

ProjectiveModel::ProjectiveModel(const Algebra& algebra, std::vector<VertexId> slot_vertices)
    : algebra_(algebra), slot_vertices_(std::move(slot_vertices)) {
  const Quiver& quiver = algebra_.quiver();
  const std::size_t bound = algebra_.loewy_bound();

  for (std::size_t r = 0; r < slot_vertices_.size(); ++r) {
    if (slot_vertices_[r].index >= quiver.vertex_count()) fail(ErrorCode::DimensionMismatch, "slot vertex out of range");
    for (auto& p : paths_up_to_length(quiver, slot_vertices_[r], bound)) spanning_.push_back(ModPath{r, std::move(p)});
  }
  std::stable_sort(spanning_.begin(), spanning_.end(), [](const ModPath& a, const ModPath& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a < b;
  });
  for (std::size_t i = 0; i < spanning_.size(); ++i) spanning_index_.emplace(spanning_[i], i);

  relations_ = RowSpace(spanning_.size());
  for (std::size_t r = 0; r < slot_vertices_.size(); ++r) {
    for (const auto& eff : algebra_.effective_relations()) {
      const Relation& rel = eff.relation;
      if (eff.origin == RelationOrigin::LengthBound || rel.source() != slot_vertices_[r]) continue;
      const std::size_t room = bound - rel.min_length();
      for (const auto& head : paths_up_to_length(quiver, rel.target(), room)) {
        Vec row(spanning_.size());
        for (const auto& t : rel.terms) {
          Path p = compose(head, t.path);
          if (p.length() > bound) continue;
          row[spanning_index_.at(ModPath{r, std::move(p)})] += t.coeff;
        }
        relations_.insert(std::move(row));
      }
    }
  }

  std::vector<bool> pivot = relations_.pivot_mask();
  basis_of_column_.assign(spanning_.size(), npos);
  for (std::size_t c = 0; c < spanning_.size(); ++c) {
    if (pivot[c]) continue;
    basis_of_column_[c] = basis_.size();
    basis_.push_back(spanning_[c]);
  }

  by_vertex_.assign(quiver.vertex_count(), {});
  local_index_.resize(basis_.size());
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    auto& bucket = by_vertex_[vertex_of(b).index];
    local_index_[b] = bucket.size();
    bucket.push_back(b);
  }

  arrow_images_.assign(quiver.arrow_count(), std::vector<Vec>(basis_.size()));
  for (std::uint32_t a = 0; a < quiver.arrow_count(); ++a) {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      if (quiver.arrow(ArrowId{a}).source != vertex_of(b)) continue;
      arrow_images_[a][b] = project(ModPath{basis_[b].slot, quiver.extend(basis_[b].path, ArrowId{a})});
    }
  }
}

Vec ProjectiveModel::project(const ModPath& p) const {
  Vec out(basis_.size());
  if (p.length() > algebra_.loewy_bound()) return out;
  if (p.slot >= slot_vertices_.size() || p.path.source != slot_vertices_[p.slot]) {
    fail(ErrorCode::EndpointMismatch, "path does not start at the norming vertex of its slot");
  }
  const std::size_t column = spanning_index_.at(p);
  if (basis_of_column_[column] != npos) {
    out[basis_of_column_[column]] = 1;
    return out;
  }
  // Reduced rows have a unit pivot and zeros in other pivot columns, so the
  // residue of a pivot path is minus the rest of its row.
  const auto& pivots = relations_.pivots();
  const auto row = std::lower_bound(pivots.begin(), pivots.end(), column) - pivots.begin();
  const Vec& rel = relations_.basis()[static_cast<std::size_t>(row)];
  for (std::size_t c = column + 1; c < rel.size(); ++c) {
    if (sgn(rel[c]) != 0) out[basis_of_column_[c]] = -rel[c];
  }
  return out;
}

Vec ProjectiveModel::act(ArrowId arrow, const Vec& v) const {
  Vec out(basis_.size());
  const auto& images = arrow_images_.at(arrow.index);
  for (std::size_t b = 0; b < v.size(); ++b) {
    if (sgn(v[b]) == 0 || images[b].empty()) continue;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (sgn(images[b][i]) != 0) out[i] += v[b] * images[b][i];
    }
  }
  return out;
}

Vec ProjectiveModel::act(const Path& path, const Vec& v) const {
  Vec out = v;
  for (ArrowId a : path.arrows) out = act(a, out);
  if (path.is_trivial()) {
    for (std::size_t b = 0; b < out.size(); ++b) {
      if (vertex_of(b) != path.source) out[b] = 0;
    }
  }
  return out;
}

ModuleRealization ProjectiveModel::realization() const {
  const Quiver& quiver = algebra_.quiver();
  ModuleRealization m;
  for (const auto& bucket : by_vertex_) m.vertex_dims.push_back(bucket.size());
  for (std::uint32_t a = 0; a < quiver.arrow_count(); ++a) {
    const Arrow& arrow = quiver.arrow(ArrowId{a});
    Matrix x(m.vertex_dims[arrow.target.index], m.vertex_dims[arrow.source.index]);
    for (std::size_t b : by_vertex_[arrow.source.index]) {
      const Vec& img = arrow_images_[a][b];
      for (std::size_t i = 0; i < img.size(); ++i) {
        if (sgn(img[i]) != 0) x(local_index_[i], local_index_[b]) = img[i];
      }
    }
    m.arrow_maps.push_back(std::move(x));
  }
  for (std::size_t r = 0; r < slot_vertices_.size(); ++r) {
    const VertexId v = slot_vertices_[r];
    Vec top(m.vertex_dims[v.index]);
    Vec global = project(ModPath{r, Path::trivial(v)});
    for (std::size_t b : by_vertex_[v.index]) top[local_index_[b]] = global[b];
    m.tops.push_back(TopElement{v, std::move(top)});
  }
  return m;
}

SemisimpleSequence ProjectiveModel::radical_layers() const {
  const std::size_t n = algebra_.quiver().vertex_count();
  SemisimpleSequence s;
  s.layers.assign(algebra_.loewy_bound() + 1, DimensionVector(n, 0));
  for (std::size_t b = 0; b < basis_.size(); ++b) ++s.layers[basis_[b].length()][vertex_of(b).index];
  return s;
}

ModuleRealization projective_realization(const Algebra& algebra, const std::vector<VertexId>& slot_vertices) {
  return ProjectiveModel(algebra, slot_vertices).realization();
}

SemisimpleSequence projective_radical_layers(const Algebra& algebra, const std::vector<VertexId>& slot_vertices) {
  return ProjectiveModel(algebra, slot_vertices).radical_layers();
}

}  // namespace qg
