#pragma once

// Algebras from the worked examples plus small helpers for building paths,
// relations and submodules by arrow name.

#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "quivergrass/algebra.hpp"
#include "quivergrass/degeneration.hpp"
#include "quivergrass/realize.hpp"
#include "quivergrass/skeleta.hpp"

namespace fx {

using namespace qg;

using Names = std::vector<std::string>;

inline Arrow arrow(const std::string& name, std::uint32_t from, std::uint32_t to) {
  return Arrow{name, VertexId{from}, VertexId{to}};
}

inline Names vertex_names(std::size_t n) {
  Names out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

// Terms are (coefficient, arrows in traversal order).
inline Relation relation(const Quiver& q, std::initializer_list<std::pair<long, Names>> terms) {
  Relation r;
  for (const auto& [c, names] : terms) r.terms.push_back({Rational(c), q.path(names)});
  return r;
}

// 1 -a-> 2 -b-> 3 without relations.
inline Algebra chain(std::size_t loewy_bound = 2) {
  return Algebra(Quiver(vertex_names(3), {arrow("a", 0, 1), arrow("b", 1, 2)}), {}, loewy_bound);
}

// Same quiver with the relation ba = 0.
inline Algebra chain_with_zero_composite() {
  Quiver q(vertex_names(3), {arrow("a", 0, 1), arrow("b", 1, 2)});
  auto rel = relation(q, {{1, {"a", "b"}}});
  return Algebra(q, {rel}, 2);
}

// One vertex, loops alpha, beta, gamma, squares zero, paths of length 4 zero.
inline Algebra three_loops() {
  Quiver q(vertex_names(1), {arrow("alpha", 0, 0), arrow("beta", 0, 0), arrow("gamma", 0, 0)});
  std::vector<Relation> rels;
  for (const char* x : {"alpha", "beta", "gamma"}) rels.push_back(relation(q, {{1, {x, x}}}));
  return Algebra(q, rels, 3);
}

inline Algebra three_loops_free(std::size_t loewy_bound) {
  Quiver q(vertex_names(1), {arrow("alpha", 0, 0), arrow("beta", 0, 0), arrow("gamma", 0, 0)});
  return Algebra(q, {}, loewy_bound);
}

// Three parallel arrows 1 -> 2, radical square zero.
inline Algebra kronecker3() {
  return Algebra(Quiver(vertex_names(2), {arrow("a1", 0, 1), arrow("a2", 0, 1), arrow("a3", 0, 1)}), {}, 1);
}

// 1 <-> 2, radical square zero.
inline Algebra two_cycle() {
  return Algebra(Quiver(vertex_names(2), {arrow("alpha", 0, 1), arrow("beta", 1, 0)}), {}, 1);
}

// Two loops with alpha^2 = beta^2 = 0 and Loewy length 3.
inline Algebra two_loops() {
  Quiver q(vertex_names(1), {arrow("alpha", 0, 0), arrow("beta", 0, 0)});
  return Algebra(q, {relation(q, {{1, {"alpha", "alpha"}}}), relation(q, {{1, {"beta", "beta"}}})}, 2);
}

// Single arrow 1 -> 2.
inline Algebra single_arrow() { return Algebra(Quiver(vertex_names(2), {arrow("a", 0, 1)}), {}, 1); }

inline std::shared_ptr<const Algebra> share(Algebra a) { return std::make_shared<const Algebra>(std::move(a)); }

// Path on `slot` (0-based) given by arrow names in traversal order.
inline ModPath mp(const ProjectiveContext& ctx, std::size_t slot, const Names& names = {}) {
  return ModPath{slot, ctx.algebra().quiver().path(ctx.slot_vertex(slot), names)};
}

inline ModPath mp(const ProjectiveModel& model, std::size_t slot, const Names& names = {}) {
  return ModPath{slot, model.algebra().quiver().path(model.slot_vertices().at(slot), names)};
}

// Linear combination of slot paths in global coordinates of the model.
inline Vec combo(const ProjectiveModel& model, std::initializer_list<std::tuple<long, std::size_t, Names>> terms) {
  Vec v(model.dimension(), Rational(0));
  for (const auto& [c, slot, names] : terms) {
    const Vec p = model.project(mp(model, slot, names));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += Rational(c) * p[i];
  }
  return v;
}

inline RowSpace span_of(std::size_t ambient, const std::vector<Vec>& vectors) {
  RowSpace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

// Row space of the submodule generated by the vectors.
inline RowSpace submodule_span(const ProjectiveModel& model, const std::vector<Vec>& generators) {
  return span_of(model.dimension(), global_basis(model, submodule_generated(model, generators)));
}

// The submodule C of (Lambda e_1)^3 over three_loops() whose quotient is the
// 11-dimensional module with three tops. The generator beta gamma beta z_1 is
// needed for that dimension; the remaining ones are listed in the example.
inline std::vector<Vec> three_loops_module_relations(const ProjectiveModel& model) {
  std::vector<Vec> gens = {
      combo(model, {{1, 0, {"gamma"}}}),
      combo(model, {{1, 0, {"alpha", "gamma"}}}),
      combo(model, {{1, 1, {"beta"}}}),
      combo(model, {{1, 1, {"gamma"}}}),
      combo(model, {{1, 1, {"alpha", "gamma"}}}),
      combo(model, {{1, 2, {"alpha"}}}),
      combo(model, {{1, 2, {"beta"}}}),
      combo(model, {{1, 0, {"alpha", "beta"}}, {-1, 0, {"beta", "alpha"}}}),
      combo(model, {{1, 0, {"beta", "gamma", "alpha"}}, {-1, 1, {"alpha", "beta"}}, {-1, 2, {"gamma"}}}),
      combo(model, {{1, 0, {"beta", "gamma", "beta"}}}),
  };
  const auto& quiver = model.algebra().quiver();
  for (const auto& p : paths_of_length(quiver, 3)) {
    Vec v = model.project(ModPath{1, p});
    gens.push_back(v);
  }
  for (const auto& p : paths_of_length(quiver, 2)) gens.push_back(model.project(ModPath{2, p}));
  return gens;
}

inline ModuleRealization three_loops_module() {
  const ProjectiveModel model(three_loops(), {VertexId{0}, VertexId{0}, VertexId{0}});
  return quotient_module(model, SubmodulePresentation{three_loops_module_relations(model)});
}

}  // namespace fx
