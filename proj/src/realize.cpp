#include "quivergrass/realize.hpp"

#include <algorithm>
#include <random>

#include "quivergrass/error.hpp"
#include "quivergrass/layering.hpp"

namespace qg {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

Vec image_of(const ModuleRealization& m, const ModPath& p) {
  const TopElement& top = m.tops.at(p.slot);
  return path_map(m, p.path) * top.vector;
}

}  // namespace

SkeletonBasis::SkeletonBasis(const Skeleton& sigma, std::size_t vertex_count) : vertex_dims(vertex_count, 0) {
  for (const auto& p : sigma) local.emplace(p, vertex_dims[p.target().index]++);
}

ModuleRealization realize_point(const Skeleton& sigma, const CriticalData& crit, const ProjectiveContext& ctx,
                                const PointData& point) {
  const Quiver& quiver = ctx.algebra().quiver();
  const std::size_t bound = ctx.algebra().loewy_bound();
  if (point.values.size() != crit.size()) {
    fail(ErrorCode::DimensionMismatch, "point has " + std::to_string(point.values.size()) + " coordinates, expected " +
                                           std::to_string(crit.size()));
  }
  const std::vector<Rational> c = point.dense();
  SkeletonBasis basis(sigma, quiver.vertex_count());

  ModuleRealization m;
  m.vertex_dims = basis.vertex_dims;
  for (std::uint32_t a = 0; a < quiver.arrow_count(); ++a) {
    const Arrow& arrow = quiver.arrow(ArrowId{a});
    Matrix x(m.vertex_dims[arrow.target.index], m.vertex_dims[arrow.source.index]);
    for (const auto& [p, col] : basis.local) {
      if (p.target() != arrow.source) continue;
      ModPath q{p.slot, quiver.extend(p.path, ArrowId{a})};
      if (q.length() > bound) continue;
      if (auto it = basis.local.find(q); it != basis.local.end()) {
        x(it->second, col) = 1;
        continue;
      }
      const std::size_t ci = crit.find(q);
      if (ci == npos) fail(ErrorCode::Internal, "path '" + quiver.format(q) + "' is neither in the skeleton nor critical");
      for (const auto& s : crit.critical[ci].sigma_set) x(basis.local.at(s), col) += c[crit.variable(ci, s)];
    }
    m.arrow_maps.push_back(std::move(x));
  }
  for (std::size_t r = 0; r < ctx.slot_count(); ++r) {
    ModPath root{r, Path::trivial(ctx.slot_vertex(r))};
    auto it = basis.local.find(root);
    if (it == basis.local.end()) continue;
    Vec top(m.vertex_dims[root.target().index]);
    top[it->second] = 1;
    m.tops.push_back(TopElement{root.target(), std::move(top)});
  }
  return m;
}

PointData point_of_module(const Skeleton& sigma, const CriticalData& crit, const ProjectiveContext& ctx,
                          const ModuleRealization& m) {
  const Quiver& quiver = ctx.algebra().quiver();
  check_shape(m, quiver);
  if (m.tops.size() != ctx.slot_count()) fail(ErrorCode::InvalidTops, "need one top element per slot");
  SkeletonBasis basis(sigma, quiver.vertex_count());
  if (basis.vertex_dims != m.vertex_dims) fail(ErrorCode::InvalidSkeleton, "skeleton size differs from the module dimension");

  // Columns: images of the skeleton paths at each vertex.
  std::vector<std::vector<Vec>> columns(quiver.vertex_count());
  std::vector<std::vector<ModPath>> labels(quiver.vertex_count());
  for (const auto& p : sigma) {
    columns[p.target().index].push_back(image_of(m, p));
    labels[p.target().index].push_back(p);
  }
  std::vector<Matrix> inverses;
  for (std::size_t v = 0; v < columns.size(); ++v) {
    auto inv = inverse(Matrix::from_columns(m.vertex_dims[v], columns[v]));
    if (!inv) fail(ErrorCode::InvalidSkeleton, "skeleton paths do not give a basis of the module");
    inverses.push_back(std::move(*inv));
  }

  PointData point;
  point.values.assign(crit.size(), std::nullopt);
  for (std::size_t ci = 0; ci < crit.critical.size(); ++ci) {
    const CriticalPath& cp = crit.critical[ci];
    const std::size_t v = cp.path.target().index;
    const Vec coords = inverses[v] * image_of(m, cp.path);
    for (std::size_t k = 0; k < coords.size(); ++k) {
      const std::size_t var = crit.variable(ci, labels[v][k]);
      if (var == npos) {
        if (sgn(coords[k]) != 0) {
          fail(ErrorCode::InvalidSkeleton, "critical path '" + quiver.format(cp.path) + "' has a component outside its sigma set");
        }
        continue;
      }
      point.values[var] = coords[k];
    }
  }
  return point;
}

std::vector<Skeleton> skeleta_of_module(const ModuleRealization& m, const ProjectiveContext& ctx, std::size_t parallel) {
  const Algebra& algebra = ctx.algebra();
  const Quiver& quiver = algebra.quiver();
  check_shape(m, quiver);
  if (m.tops.size() != ctx.slot_count()) fail(ErrorCode::InvalidTops, "need one top element per slot");
  for (std::size_t r = 0; r < ctx.slot_count(); ++r) {
    if (m.tops[r].vertex != ctx.slot_vertex(r)) fail(ErrorCode::InvalidTops, "top element does not lie at its slot's vertex");
  }
  const SemisimpleSequence s = layering_of(m, algebra);

  // filtration[l] = J^l M
  std::vector<GradedSubspace> filtration{whole_space(m)};
  for (std::size_t l = 0; l <= algebra.loewy_bound(); ++l) filtration.push_back(radical_of(quiver, m, filtration.back()));

  {
    GradedSubspace tops = filtration[1];
    for (const auto& t : m.tops) tops[t.vertex.index].insert(t.vector);
    if (graded_dims(tops) != m.vertex_dims) fail(ErrorCode::InvalidTops, "tops do not span the module modulo its radical");
    std::size_t top_dim = 0;
    for (auto d : s.top()) top_dim += d;
    if (m.tops.size() != top_dim) fail(ErrorCode::InvalidTops, "tops are not independent modulo the radical");
  }

  EnumerationOptions options;
  options.parallel = parallel;
  options.filter = [&](std::size_t level, const std::vector<ModPath>& chosen) {
    GradedSubspace span = filtration[level + 1];
    for (const auto& p : chosen) span[p.target().index].insert(image_of(m, p));
    return graded_dims(span) == graded_dims(filtration[level]);
  };
  return enumerate_skeleta(ctx, s, options);
}

std::vector<std::vector<Matrix>> hom_basis(const Quiver& quiver, const ModuleRealization& m, const ModuleRealization& n) {
  check_shape(m, quiver);
  check_shape(n, quiver);
  const std::size_t vertices = quiver.vertex_count();
  std::vector<std::size_t> offset(vertices + 1, 0);
  for (std::size_t v = 0; v < vertices; ++v) offset[v + 1] = offset[v] + n.vertex_dims[v] * m.vertex_dims[v];
  const std::size_t unknowns = offset[vertices];
  // Unknown (v, i, j) is entry (i, j) of f_v : M_v -> N_v.
  auto var = [&](std::size_t v, std::size_t i, std::size_t j) { return offset[v] + i * m.vertex_dims[v] + j; };

  std::vector<Vec> rows;
  for (std::uint32_t a = 0; a < quiver.arrow_count(); ++a) {
    const Arrow& arrow = quiver.arrow(ArrowId{a});
    const std::size_t s = arrow.source.index;
    const std::size_t t = arrow.target.index;
    const Matrix& x = m.arrow_maps[a];
    const Matrix& y = n.arrow_maps[a];
    // (f_t X - Y f_s)(i, j) = 0
    for (std::size_t i = 0; i < n.vertex_dims[t]; ++i) {
      for (std::size_t j = 0; j < m.vertex_dims[s]; ++j) {
        Vec row(unknowns);
        for (std::size_t k = 0; k < m.vertex_dims[t]; ++k) row[var(t, i, k)] += x(k, j);
        for (std::size_t k = 0; k < n.vertex_dims[s]; ++k) row[var(s, k, j)] -= y(i, k);
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
  const Matrix kernel = nullspace(Matrix::from_rows(unknowns, rows));
  std::vector<std::vector<Matrix>> basis;
  for (std::size_t c = 0; c < kernel.cols(); ++c) {
    std::vector<Matrix> f;
    for (std::size_t v = 0; v < vertices; ++v) {
      Matrix fv(n.vertex_dims[v], m.vertex_dims[v]);
      for (std::size_t i = 0; i < fv.rows(); ++i)
        for (std::size_t j = 0; j < fv.cols(); ++j) fv(i, j) = kernel(var(v, i, j), c);
      f.push_back(std::move(fv));
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

std::size_t hom_dim(const Quiver& quiver, const ModuleRealization& m, const ModuleRealization& n) {
  return hom_basis(quiver, m, n).size();
}

std::size_t unipotent_orbit_dim(const ProjectiveContext& q, const ModuleRealization& m) {
  const Quiver& quiver = q.algebra().quiver();
  const SemisimpleSequence s = layering_of(m, q.algebra());
  const DimensionVector mult = q.slot_multiplicities();
  for (std::size_t v = 0; v < mult.size(); ++v) {
    if (s.top()[v] > mult[v]) fail(ErrorCode::TopNotDominated, "top of the module exceeds the top of the projective");
  }
  const ModuleRealization jm = restrict_to(quiver, m, radical_of(quiver, m, whole_space(m)));
  const ModuleRealization projective = projective_realization(q.algebra(), q.slot_vertices());
  return hom_dim(quiver, projective, jm) - hom_dim(quiver, m, jm);
}

std::string_view to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Isomorphic: return "isomorphic";
    case IsoVerdict::NotIsomorphic: return "not-isomorphic";
    case IsoVerdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

IsoResult iso_probe(const Quiver& quiver, const ModuleRealization& m, const ModuleRealization& n,
                    const IsoProbeOptions& options) {
  IsoResult result;
  auto differ = [&](std::string why) {
    result.verdict = IsoVerdict::NotIsomorphic;
    result.reason = std::move(why);
    return result;
  };
  if (m.vertex_dims != n.vertex_dims) return differ("dimension vectors differ");
  const std::size_t depth = std::max(m.dimension(), n.dimension()) + 1;
  if (radical_layering(quiver, m, depth) != radical_layering(quiver, n, depth)) return differ("radical layerings differ");
  const auto hom_mn = hom_basis(quiver, m, n);
  const std::size_t end_m = hom_dim(quiver, m, m);
  if (hom_mn.size() != end_m) return differ("dim Hom(M, N) differs from dim End(M)");
  if (hom_dim(quiver, n, m) != hom_dim(quiver, n, n)) return differ("dim Hom(N, M) differs from dim End(N)");
  if (end_m != hom_dim(quiver, n, n)) return differ("endomorphism rings have different dimensions");

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<long> num(-options.numerator_bound, options.numerator_bound);
  std::uniform_int_distribution<long> den(1, std::max(1L, options.denominator_bound));
  for (std::size_t trial = 1; trial <= options.trials; ++trial) {
    std::vector<Matrix> f;
    for (std::size_t v = 0; v < m.vertex_dims.size(); ++v) f.emplace_back(n.vertex_dims[v], m.vertex_dims[v]);
    for (const auto& b : hom_mn) {
      Rational coeff(num(rng), den(rng));
      coeff.canonicalize();
      for (std::size_t v = 0; v < f.size(); ++v) {
        Matrix term = b[v];
        term *= coeff;
        f[v] = f[v] + term;
      }
    }
    const bool invertible = std::all_of(f.begin(), f.end(), [](const Matrix& fv) { return inverse(fv).has_value(); });
    if (invertible) {
      result.verdict = IsoVerdict::Isomorphic;
      result.reason = "invertible homomorphism found";
      result.witness = std::move(f);
      result.trial = trial;
      return result;
    }
  }
  result.reason = "no invertible homomorphism among " + std::to_string(options.trials) + " random trials";
  return result;
}

std::vector<Vec> split_by_vertex(const ProjectiveModel& model, const Vec& global) {
  const std::size_t vertices = model.algebra().quiver().vertex_count();
  std::vector<Vec> parts(vertices);
  for (std::size_t v = 0; v < vertices; ++v) parts[v].assign(model.vertex_basis(VertexId{static_cast<std::uint32_t>(v)}).size(), Rational(0));
  for (std::size_t b = 0; b < global.size(); ++b) {
    if (sgn(global[b]) != 0) parts[model.vertex_of(b).index][model.local_index(b)] = global[b];
  }
  return parts;
}

GradedSubspace graded_span(const ProjectiveModel& model, const std::vector<Vec>& global_vectors) {
  GradedSubspace u;
  const std::size_t vertices = model.algebra().quiver().vertex_count();
  for (std::size_t v = 0; v < vertices; ++v) u.emplace_back(model.vertex_basis(VertexId{static_cast<std::uint32_t>(v)}).size());
  for (const auto& g : global_vectors) {
    auto parts = split_by_vertex(model, g);
    for (std::size_t v = 0; v < vertices; ++v) u[v].insert(std::move(parts[v]));
  }
  return u;
}

GradedSubspace submodule_generated(const ProjectiveModel& model, const std::vector<Vec>& global_vectors) {
  const ModuleRealization q = model.realization();
  return submodule_closure(model.algebra().quiver(), q, graded_span(model, global_vectors));
}

std::vector<Vec> global_basis(const ProjectiveModel& model, const GradedSubspace& u) {
  std::vector<Vec> out;
  for (std::size_t v = 0; v < u.size(); ++v) {
    const auto& indices = model.vertex_basis(VertexId{static_cast<std::uint32_t>(v)});
    for (const auto& row : u[v].basis()) {
      Vec g(model.dimension());
      for (std::size_t i = 0; i < row.size(); ++i) g[indices[i]] = row[i];
      out.push_back(std::move(g));
    }
  }
  return out;
}

GradedSubspace point_submodule(const CriticalData& crit, const ProjectiveModel& model, const PointData& point) {
  const std::vector<Rational> c = point.dense();
  std::vector<Vec> generators;
  for (std::size_t ci = 0; ci < crit.critical.size(); ++ci) {
    const CriticalPath& cp = crit.critical[ci];
    Vec g = model.project(cp.path);
    for (const auto& q : cp.sigma_set) {
      const Rational& coeff = c[crit.variable(ci, q)];
      if (sgn(coeff) == 0) continue;
      Vec qv = model.project(q);
      for (std::size_t i = 0; i < g.size(); ++i) g[i] -= coeff * qv[i];
    }
    generators.push_back(std::move(g));
  }
  return submodule_generated(model, generators);
}

std::optional<ModuleRealization> quotient_in_skeleton_basis(const Skeleton& sigma, const ProjectiveModel& model,
                                                            const GradedSubspace& u) {
  const Quiver& quiver = model.algebra().quiver();
  const std::size_t vertices = quiver.vertex_count();
  SkeletonBasis basis(sigma, vertices);
  // residues[v] holds the reduced residues of the skeleton paths ending at v.
  std::vector<std::vector<Vec>> residues(vertices);
  for (const auto& p : sigma) {
    auto parts = split_by_vertex(model, model.project(p));
    residues[p.target().index].push_back(u[p.target().index].reduce(std::move(parts[p.target().index])));
  }
  std::vector<Matrix> solvers;
  for (std::size_t v = 0; v < vertices; ++v) {
    const std::size_t ambient = u[v].ambient();
    if (ambient - u[v].dim() != residues[v].size()) return std::nullopt;
    Matrix b = Matrix::from_columns(ambient, residues[v]);
    if (rank(b) != residues[v].size()) return std::nullopt;
    solvers.push_back(std::move(b));
  }
  auto solve = [&](std::size_t v, const Vec& target) {
    const Matrix& b = solvers[v];
    Matrix aug(b.rows(), b.cols() + 1);
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) aug(i, j) = b(i, j);
      aug(i, b.cols()) = target[i];
    }
    Echelon e = row_echelon(aug);
    Vec x(b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      if (e.pivots[r] == b.cols()) fail(ErrorCode::Internal, "residue outside the span of the skeleton");
      x[e.pivots[r]] = e.reduced(r, b.cols());
    }
    return x;
  };

  ModuleRealization m;
  m.vertex_dims = basis.vertex_dims;
  for (std::uint32_t a = 0; a < quiver.arrow_count(); ++a) {
    const Arrow& arrow = quiver.arrow(ArrowId{a});
    const std::size_t t = arrow.target.index;
    Matrix x(m.vertex_dims[t], m.vertex_dims[arrow.source.index]);
    for (const auto& [p, col] : basis.local) {
      if (p.target() != arrow.source) continue;
      Vec img = split_by_vertex(model, model.act(ArrowId{a}, model.project(p)))[t];
      Vec coords = solve(t, u[t].reduce(std::move(img)));
      for (std::size_t i = 0; i < coords.size(); ++i) x(i, col) = coords[i];
    }
    m.arrow_maps.push_back(std::move(x));
  }
  for (const auto& [p, col] : basis.local) {
    if (!p.path.is_trivial()) continue;
    Vec top(m.vertex_dims[p.target().index]);
    top[col] = 1;
    m.tops.push_back(TopElement{p.target(), std::move(top)});
  }
  return m;
}

}  // namespace qg
