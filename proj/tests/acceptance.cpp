// Acceptance suite: one line per criterion. Run with a criterion number to
// execute only that one; without arguments all criteria run.

#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quivergrass/degeneration.hpp"
#include "quivergrass/equations.hpp"
#include "quivergrass/error.hpp"
#include "quivergrass/layering.hpp"
#include "quivergrass/realize.hpp"
#include "quivergrass/skeleta.hpp"

using namespace qg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(1);
  out << std::fixed << s * 1000.0 << " ms";
  return out.str();
}

// Random algebras --------------------------------------------------------------

struct RandomAlgebraOptions {
  std::size_t max_vertices = 4;
  std::size_t max_arrows = 4;
  std::size_t max_loewy = 3;
  std::size_t path_budget = 40;  // paths of length <= L summed over all vertices
};

std::size_t path_total(const Quiver& q, std::size_t L) {
  std::size_t total = 0;
  for (std::uint32_t v = 0; v < q.vertex_count(); ++v) total += paths_up_to_length(q, VertexId{v}, L).size();
  return total;
}

Algebra random_algebra(std::mt19937_64& rng, const RandomAlgebraOptions& opt) {
  while (true) {
    const std::size_t n = 1 + rng() % opt.max_vertices;
    const std::size_t m = 1 + rng() % opt.max_arrows;
    const std::size_t L = 1 + rng() % opt.max_loewy;
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < m; ++i) {
      arrows.push_back(fx::arrow("x" + std::to_string(i), static_cast<std::uint32_t>(rng() % n),
                                 static_cast<std::uint32_t>(rng() % n)));
    }
    Quiver q(fx::vertex_names(n), arrows);
    if (path_total(q, L) > opt.path_budget) continue;

    std::vector<Relation> relations;
    std::vector<Path> long_paths;
    for (std::size_t len = 2; len <= L; ++len)
      for (auto& p : paths_of_length(q, len)) long_paths.push_back(std::move(p));
    const std::size_t wanted = long_paths.empty() ? 0 : rng() % 3;
    for (std::size_t k = 0; k < wanted; ++k) {
      const Path& p = long_paths[rng() % long_paths.size()];
      Relation r;
      r.terms.push_back({Rational(1), p});
      if (rng() % 2 == 0) {
        std::vector<const Path*> partners;
        for (const auto& other : long_paths)
          if (other != p && other.source == p.source && other.target == p.target) partners.push_back(&other);
        if (!partners.empty()) {
          const long c = static_cast<long>(rng() % 5) - 2;
          if (c != 0) r.terms.push_back({Rational(c), *partners[rng() % partners.size()]});
        }
      }
      relations.push_back(std::move(r));
    }
    try {
      return Algebra(q, relations, L);
    } catch (const Error&) {
      continue;  // e.g. the same path drawn twice in one relation
    }
  }
}

DimensionVector random_top(std::mt19937_64& rng, std::size_t vertices, std::size_t max_total) {
  DimensionVector top(vertices, 0);
  const std::size_t total = 1 + rng() % max_total;
  for (std::size_t k = 0; k < total; ++k) ++top[rng() % vertices];
  return top;
}

// Random subset of candidate paths closed under initial subpaths.
Skeleton random_skeleton(std::mt19937_64& rng, const ProjectiveContext& ctx, unsigned keep_percent) {
  std::vector<ModPath> chosen;
  std::set<ModPath> in;
  for (const auto& p : oracle::candidate_paths(ctx)) {
    bool parent_in = true;
    if (!p.path.is_trivial()) {
      ModPath up = p;
      up.path.arrows.pop_back();
      up.path.target = up.path.arrows.empty() ? up.path.source
                                              : ctx.algebra().quiver().arrow(up.path.arrows.back()).target;
      parent_in = in.count(up) != 0;
    }
    const bool take = p.path.is_trivial() ? ctx.setting() != Setting::Big || rng() % 100 < 70
                                          : parent_in && rng() % 100 < keep_percent;
    if (take) {
      chosen.push_back(p);
      in.insert(p);
    }
  }
  return Skeleton(chosen);
}

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t variables, std::size_t max_terms) {
  Polynomial p;
  const std::size_t terms = 1 + rng() % max_terms;
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m;
    if (variables > 0) {
      for (std::size_t d = rng() % 3; d > 0; --d) m = m * Monomial::variable(static_cast<std::uint32_t>(rng() % variables));
    }
    const long num = static_cast<long>(rng() % 7) - 3;
    p += Polynomial::term(Rational(num) / (1 + static_cast<long>(rng() % 3)), m);
  }
  return p;
}

// Criterion 1 ---------------------------------------------------------------------

Outcome kronecker_charts() {
  Outcome out;
  const auto start = Clock::now();
  const auto alg = fx::share(fx::kronecker3());
  const SemisimpleSequence s{{{2, 0}, {0, 3}}};
  const auto small = ProjectiveContext::small(alg, {2, 0});
  const auto skeleta = enumerate_skeleta(small, s);
  const auto brute = oracle::skeleta_by_subsets(small, s);
  out.expect(skeleta.size() == 20, "small enumeration found " + std::to_string(skeleta.size()) + " skeleta");
  out.expect(skeleta == brute, "enumeration differs from the subset oracle");
  for (const auto& sk : skeleta) {
    const auto crit = critical_data(sk, small);
    const auto ideal = sigma_ideal(sk, crit, small);
    out.expect(crit.size() == 9 && crit.n1 == 9, "|N1| != 9");
    out.expect(ideal.generators.empty(), "nonzero ideal in the small setting");
  }
  const auto big = ProjectiveContext::big(alg, {2, 3});
  const auto big_skeleta = enumerate_skeleta(big, s);
  out.expect(big_skeleta == oracle::skeleta_by_subsets(big, s), "big enumeration differs from the subset oracle");
  for (const auto& sk : big_skeleta) {
    const auto crit = critical_data(sk, big);
    const auto ideal = big_presentation(sk, crit, big);
    out.expect(ideal.variable_count == 18, "|N| != 18 in the big setting");
    out.expect(ideal.free_count() == 9, "free variable count != 9");
    out.expect(ideal.generators.empty(), "nonzero ideal in the big setting");
  }
  const double t = seconds_since(start);
  out.expect(t < 1.0, "runtime " + fmt_seconds(t));
  out.detail = std::to_string(skeleta.size()) + " skeleta, |N1| = 9, big |N| = 18 with 9 free, " + fmt_seconds(t);
  return out;
}

// Parses formatted paths such as "2: alpha.beta" on one-vertex quivers.
std::vector<ModPath> candidate_paths_of(const std::set<std::string>& formatted, const Quiver& q) {
  std::vector<ModPath> out;
  for (const auto& text : formatted) {
    const auto colon = text.find(':');
    const std::size_t slot = std::stoul(text.substr(0, colon)) - 1;
    std::vector<std::string> names;
    std::string rest = text.substr(colon + 1);
    std::stringstream ss(rest);
    std::string name;
    while (std::getline(ss, name, '.')) {
      name.erase(0, name.find_first_not_of(' '));
      if (!name.empty()) names.push_back(name);
    }
    out.push_back(ModPath{slot, q.path(VertexId{0}, names)});
  }
  return out;
}

// Criterion 2 ---------------------------------------------------------------------

Outcome three_loop_skeleta() {
  Outcome out;
  const auto start = Clock::now();
  const auto alg = fx::share(fx::three_loops());
  const auto& q = alg->quiver();
  const auto ctx = ProjectiveContext::general(alg, {VertexId{0}, VertexId{0}, VertexId{0}});
  const auto m = fx::three_loops_module();
  out.expect(m.dimension() == 11, "module has dimension " + std::to_string(m.dimension()));
  const auto found = skeleta_of_module(m, ctx);
  std::set<Skeleton> classes;
  for (const auto& sk : found) classes.insert(canonical_relabeling(sk, ctx));
  out.expect(classes.size() == 2, std::to_string(classes.size()) + " skeleta up to slot permutation");

  auto set_of = [&](const Skeleton& sk) {
    std::set<std::string> s;
    for (const auto& p : sk) s.insert(q.format(p));
    return s;
  };
  // The drawn first skeleton lacks beta alpha z2; the module's first skeleton
  // is that tree plus beta alpha z2.
  const std::set<std::string> drawn{"1:",          "2:",           "3:",           "1: alpha",
                                    "1: beta",     "2: alpha",     "1: alpha.beta", "1: beta.gamma",
                                    "1: alpha.beta.gamma", "1: beta.gamma.alpha"};
  const Skeleton* first = nullptr;
  for (const auto& sk : found) {
    auto s = set_of(sk);
    s.erase("2: alpha.beta");
    if (s == drawn) first = &sk;
  }
  out.expect(first != nullptr, "no skeleton of the module extends the drawn first skeleton");

  std::vector<ModPath> drawn_paths;
  for (const auto& p : candidate_paths_of(drawn, q)) drawn_paths.push_back(p);
  const Skeleton sigma(drawn_paths);
  const auto crit = critical_data(sigma, ProjectiveContext::small(alg, {3}));
  const ProjectiveModel model(*alg, ctx.slot_vertices());
  std::set<std::string> critical;
  for (const auto& c : crit.critical)
    if (!model.vanishes(c.path)) critical.insert(q.format(c.path));
  const std::set<std::string> listed{"1: gamma", "1: alpha.gamma", "1: alpha.beta.alpha", "1: beta.alpha",
                                     "1: beta.gamma.beta", "2: beta", "2: gamma", "2: alpha.beta",
                                     "2: alpha.gamma", "3: alpha", "3: beta", "3: gamma"};
  out.expect(critical == listed, "critical paths differ from the listed twelve");
  std::set<std::string> sigma_set;
  const auto idx = crit.find(ModPath{0, q.path({"alpha", "gamma"})});
  if (idx != static_cast<std::size_t>(-1))
    for (const auto& p : crit.critical[idx].sigma_set) sigma_set.insert(q.format(p));
  out.expect(sigma_set == std::set<std::string>{"1: alpha.beta", "1: beta.gamma", "1: alpha.beta.gamma",
                                                "1: beta.gamma.alpha"},
             "sigma-set of gamma alpha z1 differs");
  const double t = seconds_since(start);
  out.expect(t < 5.0, "runtime " + fmt_seconds(t));
  out.detail = std::to_string(classes.size()) + " skeleta, " + std::to_string(critical.size()) +
               " critical paths with nonzero residue, " + fmt_seconds(t);
  return out;
}

// Criterion 3 ---------------------------------------------------------------------

Outcome n_invariance() {
  Outcome out;
  const auto start = Clock::now();
  std::mt19937_64 rng(20240301);
  std::size_t algebras = 0, sequences = 0, skeleta = 0, realizable = 0;
  RandomAlgebraOptions opt;
  while (algebras < 120) {
    const Algebra alg = random_algebra(rng, opt);
    const auto shared = fx::share(alg);
    const std::size_t n = alg.quiver().vertex_count();
    const bool big = rng() % 4 == 0;
    const DimensionVector top = random_top(rng, n, big ? 2 : 3);
    const auto ctx = big ? ProjectiveContext::big(shared, top) : ProjectiveContext::small(shared, top);
    if (oracle::candidate_paths(ctx).size() > 16) continue;
    ++algebras;

    std::map<std::vector<DimensionVector>, std::vector<Skeleton>> groups;
    oracle::for_each_closed_set(ctx, big, [&](const std::vector<ModPath>& set) {
      groups[oracle::count_layers(set, n, alg.loewy_bound() + 1).layers].emplace_back(set);
    });
    for (auto& [layers, group] : groups) {
      const SemisimpleSequence s{layers};
      ++sequences;
      skeleta += group.size();
      realizable += validate_sequence(s, alg).ok;
      std::sort(group.begin(), group.end());
      out.expect(enumerate_skeleta(ctx, s) == group, "enumeration differs from the subset oracle for " + format_sequence(s));
      const std::size_t expected = oracle::n_from_sequence(ctx, s);
      for (const auto& sk : group) {
        const std::size_t got = critical_data(sk, ctx).size();
        out.expect(got == expected, "|N| = " + std::to_string(got) + " but " + std::to_string(expected) +
                                        " expected for " + format_sequence(s));
      }
      const auto report = n_invariance_check(ctx, s);
      out.expect(report.holds && report.skeleta == group.size(), "n_invariance_check disagrees for " + format_sequence(s));
    }
  }
  const double t = seconds_since(start);
  out.expect(t < 120.0, "runtime " + fmt_seconds(t));
  out.detail = std::to_string(algebras) + " algebras, " + std::to_string(sequences) + " sequences (" +
               std::to_string(realizable) + " within the projective cover), " + std::to_string(skeleta) +
               " skeleta, " + fmt_seconds(t);
  return out;
}

// Criterion 4 ---------------------------------------------------------------------

FreeElement random_free_element(std::mt19937_64& rng, const ProjectiveContext& ctx, std::size_t variables) {
  FreeElement y;
  const std::size_t terms = 1 + rng() % 4;
  for (std::size_t k = 0; k < terms; ++k) {
    const std::size_t r = rng() % ctx.slot_count();
    const auto paths = paths_up_to_length(ctx.algebra().quiver(), ctx.slot_vertex(r), ctx.algebra().loewy_bound() + 1);
    y = y + FreeElement{{ModPath{r, paths[rng() % paths.size()]}, random_polynomial(rng, variables, 3)}};
  }
  return y;
}

Outcome normal_form_consistency() {
  Outcome out;
  const auto start = Clock::now();
  std::mt19937_64 rng(77);
  RandomAlgebraOptions opt;
  std::size_t elements = 0, contexts = 0;
  while (elements < 1200) {
    const Algebra alg = random_algebra(rng, opt);
    const auto shared = fx::share(alg);
    const bool big = rng() % 3 == 0;
    const DimensionVector top = random_top(rng, alg.quiver().vertex_count(), 2);
    const auto ctx = big ? ProjectiveContext::big(shared, top) : ProjectiveContext::small(shared, top);
    const Skeleton sigma = random_skeleton(rng, ctx, 60);
    const auto crit = critical_data(sigma, ctx);
    ++contexts;
    for (int k = 0; k < 25; ++k, ++elements) {
      const auto y = random_free_element(rng, ctx, crit.size());
      const auto canonical = normal_form(y, sigma, crit, ctx, ReductionStrategy::Canonical);
      const auto depth = normal_form(y, sigma, crit, ctx, ReductionStrategy::DepthFirst);
      const auto shuffled = normal_form(y, sigma, crit, ctx, ReductionStrategy::Shuffled, rng());
      out.expect(canonical == depth && canonical == shuffled, "reduction strategies disagree");
      for (const auto& [p, c] : canonical) out.expect(sigma.contains(p), "normal form leaves the skeleton");

      const auto z = random_free_element(rng, ctx, crit.size());
      const auto a = random_polynomial(rng, crit.size(), 2);
      const auto b = random_polynomial(rng, crit.size(), 2);
      const auto lhs = normal_form(scale(y, a) + scale(z, b), sigma, crit, ctx, ReductionStrategy::Shuffled, rng());
      const auto rhs = scale(canonical, a) + scale(normal_form(z, sigma, crit, ctx), b);
      out.expect(lhs == rhs, "normal form is not K[X]-linear");
    }
  }
  out.detail = std::to_string(elements) + " elements over " + std::to_string(contexts) + " charts, 3 strategies, " +
               fmt_seconds(seconds_since(start));
  return out;
}

// Criterion 5 ---------------------------------------------------------------------

bool membership_by_module(const Skeleton& sigma, const CriticalData& crit, const ProjectiveContext& ctx,
                          const PointData& c) {
  const auto m = realize_point(sigma, crit, ctx, c);
  if (relations_check(m, ctx.algebra())) return false;
  const auto layering = layering_of(m, ctx.algebra());
  const auto expected = compatible_sequence(sigma, ctx);
  if (layering != expected) return false;
  for (std::size_t l = 0; l < layering.depth(); ++l) {
    std::size_t dim = 0;
    for (auto d : layering.layers[l]) dim += d;
    if (dim != sigma.layer(l).size()) return false;
  }
  return true;
}

Outcome oracle_equivalence() {
  Outcome out;
  const auto start = Clock::now();
  std::mt19937_64 rng(515);
  RandomAlgebraOptions opt;
  opt.path_budget = 30;
  std::size_t pairs = 0, members = 0, charts = 0, with_equations = 0;
  while (pairs < 600) {
    const Algebra alg = random_algebra(rng, opt);
    const auto shared = fx::share(alg);
    const auto ctx = ProjectiveContext::small(shared, random_top(rng, alg.quiver().vertex_count(), 2));
    const Skeleton sigma = random_skeleton(rng, ctx, 55);
    const auto crit = critical_data(sigma, ctx);
    const auto ideal = sigma_ideal(sigma, crit, ctx);
    if (ideal.generators.empty() && rng() % 4 != 0) continue;
    const ProjectiveModel model(alg, ctx.slot_vertices());
    ++charts;
    with_equations += !ideal.generators.empty();

    std::vector<PointData> points{PointData::zeros(crit.size())};
    for (int k = 0; k < 4; ++k) {
      PointData c = PointData::zeros(crit.size());
      for (auto& v : c.values)
        if (rng() % 3 == 0) v = Rational(static_cast<long>(rng() % 5) - 2);
      points.push_back(c);
      // The module Q / U(c), read back in the chart when sigma is a basis of it.
      if (auto m = quotient_in_skeleton_basis(sigma, model, point_submodule(crit, model, c))) {
        points.push_back(point_of_module(sigma, crit, ctx, *m));
      }
    }
    for (const auto& c : points) {
      ++pairs;
      const bool lhs = evaluate_membership(ideal, c);
      members += lhs;
      const bool rhs = membership_by_module(sigma, crit, ctx, c);
      out.expect(lhs == rhs, "membership " + std::string(lhs ? "holds" : "fails") + " but the realized module says " +
                                 (rhs ? "member" : "non-member"));
      const auto quotient = quotient_in_skeleton_basis(sigma, model, point_submodule(crit, model, c));
      const bool uc = quotient.has_value() && *quotient == realize_point(sigma, crit, ctx, c);
      out.expect(lhs == uc, "membership disagrees with the U(c) quotient");
    }
  }
  out.detail = std::to_string(pairs) + " (sigma, c) pairs over " + std::to_string(charts) + " charts (" +
               std::to_string(with_equations) + " with equations), " + std::to_string(members) + " members, " + fmt_seconds(seconds_since(start));
  return out;
}

// Criterion 6 ---------------------------------------------------------------------

Outcome two_loop_chain() {
  Outcome out;
  const auto start = Clock::now();
  const ProjectiveModel model(fx::two_loops(), {VertexId{0}, VertexId{0}, VertexId{0}});
  const auto& q = model.algebra().quiver();
  const UPoly t = UPoly::monomial(Rational(1), 1);
  auto term = [&](long c, std::size_t target, const fx::Names& names) {
    return CurveTerm{RationalFunction(t * Rational(c)), q.path(VertexId{0}, names), target};
  };
  auto curve = [](std::vector<std::vector<CurveTerm>> terms) {
    terms.resize(3);
    return UnipotentCurve{std::move(terms)};
  };
  using fx::combo;
  // Product notation in comments; traversal order in the code.
  SubmodulePresentation c{{combo(model, {{1, 0, {}}}), combo(model, {{1, 2, {}}})}};
  const auto m0 = quotient_module(model, c);

  struct Step {
    UnipotentCurve g;
    std::vector<Vec> expected;
    SemisimpleSequence layers;
  };
  const std::vector<Step> steps{
      // z1 -> z1 + t (beta z1 - alpha z2); C1 = <alpha z1, beta z1 - alpha z2, z3>
      {curve({{term(1, 0, {"beta"}), term(-1, 1, {"alpha"})}}),
       {combo(model, {{1, 0, {"alpha"}}}), combo(model, {{1, 0, {"beta"}}, {-1, 1, {"alpha"}}}), combo(model, {{1, 2, {}}})},
       SemisimpleSequence{{{2}, {2}, {1}}}},
      // z1 -> z1 + t beta z2; C2 = <alpha beta z2, beta z1 - alpha z2, beta alpha z1, z3>
      {curve({{term(1, 1, {"beta"})}}),
       {combo(model, {{1, 1, {"beta", "alpha"}}}), combo(model, {{1, 0, {"beta"}}, {-1, 1, {"alpha"}}}),
        combo(model, {{1, 0, {"alpha", "beta"}}}), combo(model, {{1, 2, {}}})},
       SemisimpleSequence{{{2}, {3}, {0}}}},
      // z3 -> z3 + t (beta z2 - a^2 alpha z1 + 2a alpha z2) at a = 1
      {curve({{}, {}, {term(1, 1, {"beta"}), term(-1, 0, {"alpha"}), term(2, 1, {"alpha"})}}),
       {combo(model, {{1, 0, {"alpha", "beta"}}}), combo(model, {{1, 0, {"beta"}}, {-1, 1, {"alpha"}}}),
        combo(model, {{1, 1, {"beta"}}, {-1, 0, {"alpha"}}, {2, 1, {"alpha"}}}), combo(model, {{1, 2, {"alpha"}}}),
        combo(model, {{1, 2, {"beta"}}})},
       SemisimpleSequence{{{3}, {2}, {0}}}},
  };
  const auto& alg = model.algebra();
  out.expect(layering_of(m0, alg) == SemisimpleSequence{{{1}, {2}, {2}}}, "M has the wrong layering");
  std::vector<std::string> verdicts;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto report = unipotent_degenerate(model, c, steps[k].g);
    const auto want = fx::submodule_span(model, steps[k].expected);
    const auto got = fx::span_of(model.dimension(), report.limit);
    out.expect(got == want, "step " + std::to_string(k + 1) + " limit differs from the stated submodule");
    out.expect(fx::submodule_span(model, report.limit) == got, "step " + std::to_string(k + 1) + " limit is not a submodule");
    out.expect(report.after_layers == steps[k].layers, "step " + std::to_string(k + 1) + " layering " +
                                                            format_sequence(report.after_layers));
    out.expect(report.verdict == DominanceVerdict::StrictlyDominates,
               "step " + std::to_string(k + 1) + " verdict " + std::string(to_string(report.verdict)));
    verdicts.push_back(format_sequence(report.after_layers));
    c.generators = report.limit;
  }

  // Family at [a1:a2] = [1:1], [b1:b2] = [1:-1]:
  // z1 -> z1 + t (alpha z2 - beta z2), z3 -> z3 + t (alpha z1 + beta z1).
  const SubmodulePresentation c0{{combo(model, {{1, 0, {}}}), combo(model, {{1, 2, {}}})}};
  const auto family = curve({{term(1, 1, {"alpha"}), term(-1, 1, {"beta"})}, {}, {term(1, 0, {"alpha"}), term(1, 0, {"beta"})}});
  const auto report = unipotent_degenerate(model, c0, family);
  const auto want = fx::submodule_span(model, {combo(model, {{1, 1, {"alpha"}}, {-1, 1, {"beta"}}}),
                                               combo(model, {{1, 0, {"alpha"}}, {1, 0, {"beta"}}}),
                                               combo(model, {{1, 2, {"alpha"}}}), combo(model, {{1, 2, {"beta"}}})});
  out.expect(want.dim() == 10, "stated family span has dimension " + std::to_string(want.dim()));
  out.expect(fx::span_of(model.dimension(), report.limit) == want, "family limit differs from the stated span");

  const double t_total = seconds_since(start);
  out.expect(t_total < 10.0, "runtime " + fmt_seconds(t_total));
  out.detail = "layerings " + format_sequence(layering_of(m0, alg));
  for (const auto& v : verdicts) out.detail += " -> " + v;
  out.detail += ", family limit dim " + std::to_string(report.limit.size()) + ", " + fmt_seconds(t_total);
  return out;
}

// Criterion 7 ---------------------------------------------------------------------

Outcome dominance_property() {
  Outcome out;
  const auto start = Clock::now();
  std::mt19937_64 rng(4303);
  RandomAlgebraOptions opt;
  opt.max_vertices = 3;
  opt.path_budget = 24;
  std::size_t curves = 0, strict = 0, proper = 0, equal = 0;
  while (curves < 220) {
    const Algebra alg = random_algebra(rng, opt);
    const std::size_t n = alg.quiver().vertex_count();
    std::vector<VertexId> slots;
    for (std::size_t k = 1 + rng() % 3; k > 0; --k) slots.push_back(VertexId{static_cast<std::uint32_t>(rng() % n)});
    std::sort(slots.begin(), slots.end());
    const ProjectiveModel model(alg, slots);
    if (model.dimension() > 24 || model.dimension() == 0) continue;

    SubmodulePresentation c;
    for (std::size_t g = 1 + rng() % 2; g > 0; --g) {
      Vec v(model.dimension(), Rational(0));
      for (std::size_t k = 1 + rng() % 3; k > 0; --k) v[rng() % v.size()] += Rational(1 + static_cast<long>(rng() % 3));
      c.generators.push_back(v);
    }

    UnipotentCurve g;
    g.slot_terms.resize(slots.size());
    std::size_t terms = 0;
    for (std::size_t r = 0; r < slots.size(); ++r) {
      for (std::size_t k = rng() % 3; k > 0; --k) {
        const std::size_t j = rng() % slots.size();
        std::vector<Path> paths;
        for (auto& p : paths_up_to_length(alg.quiver(), slots[j], alg.loewy_bound()))
          if (!p.is_trivial() && p.target == slots[r]) paths.push_back(std::move(p));
        if (paths.empty()) continue;
        std::vector<Rational> coeffs;
        for (std::size_t d = 0, deg = rng() % 3; d <= deg; ++d) coeffs.push_back(Rational(static_cast<long>(rng() % 5) - 2));
        RationalFunction coeff{UPoly(coeffs)};
        if (rng() % 5 == 0) coeff = coeff / RationalFunction(UPoly({Rational(1), Rational(1)}));
        g.slot_terms[r].push_back(CurveTerm{coeff, paths[rng() % paths.size()], j});
        ++terms;
      }
    }
    if (terms == 0) continue;
    ++curves;

    IsoProbeOptions iso;
    iso.trials = 12;
    iso.seed = rng();
    const auto report = unipotent_degenerate(model, c, g, iso);
    const auto span = fx::span_of(model.dimension(), report.limit);
    out.expect(report.limit.size() == fx::submodule_span(model, c.generators).dim(), "limit changed dimension");
    out.expect(fx::submodule_span(model, report.limit) == span, "limit is not a submodule");
    out.expect(report.verdict != DominanceVerdict::Violates,
               "dominance violated: " + format_sequence(report.before_layers) + " -> " + format_sequence(report.after_layers));
    if (report.iso.verdict == IsoVerdict::NotIsomorphic) {
      ++proper;
      out.expect(report.verdict == DominanceVerdict::StrictlyDominates, "proper degeneration with equal layering");
    }
    strict += report.verdict == DominanceVerdict::StrictlyDominates;
    equal += report.verdict == DominanceVerdict::Equal;
  }
  out.detail = std::to_string(curves) + " curves: " + std::to_string(strict) + " strictly dominating, " +
               std::to_string(equal) + " equal, " + std::to_string(proper) + " certified proper, " +
               fmt_seconds(seconds_since(start));
  return out;
}

// Criterion 8 ---------------------------------------------------------------------

ModuleRealization semisimple(const Quiver& q, const DimensionVector& dims) {
  ModuleRealization m;
  m.vertex_dims = dims;
  for (const auto& a : q.arrows()) m.arrow_maps.emplace_back(dims[a.target.index], dims[a.source.index]);
  for (std::uint32_t v = 0; v < dims.size(); ++v) {
    for (std::size_t k = 0; k < dims[v]; ++k) {
      Vec e(dims[v], Rational(0));
      e[k] = 1;
      m.tops.push_back({VertexId{v}, e});
    }
  }
  return m;
}

Outcome orbit_dimensions() {
  Outcome out;
  const auto cyc = fx::share(fx::two_cycle());
  const auto bold = ProjectiveContext::general(cyc, {VertexId{0}, VertexId{1}});
  const std::size_t d = unipotent_orbit_dim(bold, projective_realization(*cyc, {VertexId{0}}));
  out.expect(d == 1, "orbit of the projective cover has dimension " + std::to_string(d));
  std::size_t checked = 0;
  for (const auto& alg : {fx::two_cycle(), fx::kronecker3(), fx::single_arrow(), fx::two_loops(), fx::three_loops()}) {
    const auto shared = fx::share(alg);
    const std::size_t n = alg.quiver().vertex_count();
    for (std::size_t mult = 1; mult <= 2; ++mult) {
      DimensionVector dims(n, mult);
      std::vector<VertexId> slots;
      for (std::uint32_t v = 0; v < n; ++v)
        for (std::size_t k = 0; k < mult; ++k) slots.push_back(VertexId{v});
      const auto ctx = ProjectiveContext::general(shared, slots);
      const std::size_t z = unipotent_orbit_dim(ctx, semisimple(alg.quiver(), dims));
      out.expect(z == 0, "semisimple module has orbit dimension " + std::to_string(z));
      ++checked;
    }
  }
  out.detail = "projective cover orbit dimension " + std::to_string(d) + ", " + std::to_string(checked) +
               " semisimple modules with dimension 0";
  return out;
}

// Criterion 9 ---------------------------------------------------------------------

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" + QG_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome cli_determinism() {
  Outcome out;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("quivergrass_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir / "a");
  fs::create_directories(dir / "b");
  const std::string data = QG_DATA_DIR;
  auto q = [](const fs::path& p) { return "\"" + p.string() + "\""; };

  // Inputs shared by both runs.
  const fs::path skeleta = dir / "kronecker.skeleta";
  const fs::path big_skeleta = dir / "kronecker_big.skeleta";
  out.expect(run_cli("skeleta " + data + "/kronecker3.json --sequence [[2,0],[0,3]] --out " + q(skeleta)) == 0,
             "skeleta command failed");
  out.expect(run_cli("skeleta " + data + "/kronecker3.json --sequence [[2,0],[0,3]] --setting big --out " +
                     q(big_skeleta)) == 0,
             "big skeleta command failed");

  const std::vector<std::pair<std::string, std::string>> commands{
      {"info.txt", "info " + data + "/two_loops.json"},
      {"skeleta.txt", "--parallel 3 skeleta " + data + "/kronecker3.json --sequence [[2,0],[0,3]]"},
      {"dedupe.txt", "skeleta " + data + "/three_loops.json --sequence [[2],[2],[1],[0]] --dedupe"},
      {"ideal.txt", "equations " + data + "/kronecker3.json --skeleton " + q(skeleta) + " --index 7"},
      {"ideal.json", "equations " + data + "/kronecker3.json --skeleton " + q(big_skeleta) + " --index 3 --format json"},
      {"point.txt", "check-point " + data + "/kronecker3.json --skeleton " + q(skeleta) + " --index 2 --point " + data +
                        "/kronecker3_point.json"},
      {"module.txt", "realize " + data + "/kronecker3.json --skeleton " + q(skeleta) + " --index 2 --point " + data +
                         "/kronecker3_point.json"},
      {"degeneration.txt", "--seed 11 degenerate " + data + "/two_loops.json --submodule " + data +
                               "/two_loops_submodule.json --curve " + data + "/two_loops_chain.curves"},
      {"dominance.txt", "dominance --seq-a [[1],[2],[2]] --seq-b [[2],[2],[1]]"},
  };
  std::size_t identical = 0;
  for (const auto& [name, args] : commands) {
    for (const char* run : {"a", "b"}) {
      const int code = run_cli(args + " --out " + q(dir / run / name));
      out.expect(code == 0, name + " exited with " + std::to_string(code));
    }
    const std::string a = slurp(dir / "a" / name);
    const std::string b = slurp(dir / "b" / name);
    out.expect(!a.empty() && a == b, name + " differs between runs");
    auto manifest = [&](const char* run) {
      auto j = nlohmann::json::parse(slurp(dir / run / (name + ".manifest.json")));
      j.erase("wall_time_ms");
      j["output"].erase("path");
      return j;
    };
    try {
      out.expect(manifest("a") == manifest("b"), name + " manifests differ beyond wall time");
    } catch (const std::exception& e) {
      out.expect(false, name + " manifest unreadable: " + e.what());
    }
    identical += !a.empty() && a == b;
  }

  // Content spot checks and the environment override.
  out.expect(slurp(dir / "a" / "info.txt").find("dim Lambda e_1 = 5; layers 1,2,2") != std::string::npos,
             "info output lacks the projective dimension line");
  out.expect(run_cli("--seed 1 dominance --seq-a [[1]] --seq-b [[1]] --out " + q(dir / "env.txt"), "QUIVERGRASS_SEED=99") == 0,
             "seeded run failed");
  try {
    const auto j = nlohmann::json::parse(slurp(dir / "env.txt.manifest.json"));
    out.expect(j["seed"] == 99, "QUIVERGRASS_SEED did not override --seed");
  } catch (const std::exception&) {
    out.expect(false, "seeded manifest unreadable");
  }
  out.expect(run_cli("skeleta " + data + "/kronecker3.json --sequence [[2,0],[0,7]] --require-nonempty") == 3,
             "empty enumeration with --require-nonempty did not exit with 3");
  out.expect(run_cli("info " + q(dir / "missing.json")) == 2, "missing input did not exit with 2");
  fs::remove_all(dir);
  out.detail = std::to_string(identical) + "/" + std::to_string(commands.size()) + " commands byte-identical across runs";
  return out;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "Kronecker charts: 20 skeleta, |N1| = 9, big |N| = 18", kronecker_charts},
      {2, "three-loop module: two skeleta and the critical paths", three_loop_skeleta},
      {3, "|N| depends only on the semisimple sequence", n_invariance},
      {4, "normal forms agree across strategies and are linear", normal_form_consistency},
      {5, "chart membership matches the realized module", oracle_equivalence},
      {6, "two-loop degeneration chain limits", two_loop_chain},
      {7, "unipotent limits never violate dominance", dominance_property},
      {8, "unipotent orbit dimensions", orbit_dimensions},
      {9, "CLI outputs are byte-identical across runs", cli_determinism},
  };
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  bool all_pass = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    all_pass = all_pass && o.pass;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << c.name;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
  }
  return all_pass ? 0 : 1;
}
