#include "quivergrass/equations.hpp"

#include <random>
#include <thread>

#include "quivergrass/error.hpp"

namespace qg {

FreeElement operator+(const FreeElement& a, const FreeElement& b) {
  FreeElement out = a;
  for (const auto& [p, c] : b) {
    auto& slot = out[p];
    slot += c;
    if (slot.is_zero()) out.erase(p);
  }
  return out;
}

FreeElement scale(const FreeElement& a, const Polynomial& p) {
  FreeElement out;
  for (const auto& [path, c] : a) {
    Polynomial v = c * p;
    if (!v.is_zero()) out.emplace(path, std::move(v));
  }
  return out;
}

namespace {

void accumulate(FreeElement& into, const ModPath& p, const Polynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = into.emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) into.erase(it);
}

class Rewriter {
 public:
  Rewriter(const Skeleton& sigma, const CriticalData& crit, const ProjectiveContext& ctx)
      : sigma_(sigma), crit_(crit), quiver_(ctx.algebra().quiver()), bound_(ctx.algebra().loewy_bound()) {}

  bool is_final(const ModPath& p) const { return sigma_.contains(p); }

  // One rewriting step of a path outside sigma: the weighted paths replacing it.
  std::vector<std::pair<Polynomial, ModPath>> step(const ModPath& u) const {
    std::vector<std::pair<Polynomial, ModPath>> out;
    if (u.length() > 2 * bound_ + 1) fail(ErrorCode::Internal, "rewriting produced an overlong path");
    if (u.length() > bound_) return out;
    std::size_t k = 0;
    ModPath prefix{u.slot, Path::trivial(u.path.source)};
    while (sigma_.contains(prefix)) {
      if (k == u.length()) fail(ErrorCode::Internal, "step called on a skeleton path");
      prefix.path = quiver_.extend(prefix.path, u.path.arrows[k]);
      ++k;
    }
    const std::size_t c = crit_.find(prefix);
    if (c == static_cast<std::size_t>(-1)) {
      if (prefix.length() <= bound_) fail(ErrorCode::Internal, "missing critical path '" + quiver_.format(prefix) + "'");
      return out;
    }
    for (const auto& q : crit_.critical[c].sigma_set) {
      ModPath v{q.slot, q.path};
      for (std::size_t i = k; i < u.length(); ++i) v.path = quiver_.extend(v.path, u.path.arrows[i]);
      out.emplace_back(Polynomial::variable(static_cast<std::uint32_t>(crit_.variable(c, q))), std::move(v));
    }
    return out;
  }

 private:
  const Skeleton& sigma_;
  const CriticalData& crit_;
  const Quiver& quiver_;
  std::size_t bound_;
};

constexpr std::size_t kStepGuard = 1'000'000;

FreeElement reduce_worklist(const FreeElement& y, const Rewriter& rw, bool shuffled, std::uint64_t seed) {
  FreeElement done;
  FreeElement pending;
  for (const auto& [p, c] : y) accumulate(rw.is_final(p) ? done : pending, p, c);
  std::mt19937_64 rng(seed);
  std::size_t steps = 0;
  while (!pending.empty()) {
    if (++steps > kStepGuard) fail(ErrorCode::Internal, "normal form rewriting did not terminate");
    auto it = pending.begin();
    if (shuffled) std::advance(it, static_cast<std::ptrdiff_t>(rng() % pending.size()));
    const ModPath u = it->first;
    const Polynomial coeff = it->second;
    pending.erase(it);
    for (const auto& [x, v] : rw.step(u)) accumulate(rw.is_final(v) ? done : pending, v, coeff * x);
  }
  return done;
}

class MemoReducer {
 public:
  explicit MemoReducer(const Rewriter& rw) : rw_(rw) {}

  const FreeElement& reduce(const ModPath& u) {
    if (auto it = memo_.find(u); it != memo_.end()) return it->second;
    if (++depth_ > kStepGuard) fail(ErrorCode::Internal, "normal form recursion did not terminate");
    FreeElement out;
    if (rw_.is_final(u)) {
      out.emplace(u, Polynomial(Rational(1)));
    } else {
      for (const auto& [x, v] : rw_.step(u)) {
        for (const auto& [w, c] : reduce(v)) accumulate(out, w, c * x);
      }
    }
    return memo_.emplace(u, std::move(out)).first->second;
  }

 private:
  const Rewriter& rw_;
  std::map<ModPath, FreeElement> memo_;
  std::size_t depth_ = 0;
};

}  // namespace

FreeElement normal_form(const FreeElement& y, const Skeleton& sigma, const CriticalData& crit,
                        const ProjectiveContext& ctx, ReductionStrategy strategy, std::uint64_t seed) {
  Rewriter rw(sigma, crit, ctx);
  switch (strategy) {
    case ReductionStrategy::Canonical: return reduce_worklist(y, rw, false, seed);
    case ReductionStrategy::Shuffled: return reduce_worklist(y, rw, true, seed);
    case ReductionStrategy::DepthFirst: {
      MemoReducer memo(rw);
      FreeElement out;
      for (const auto& [p, c] : y)
        for (const auto& [w, d] : memo.reduce(p)) accumulate(out, w, d * c);
      return out;
    }
  }
  fail(ErrorCode::Internal, "unknown reduction strategy");
}

namespace {

std::vector<IdealGenerator> generators_for(std::size_t rel_index, const Relation& rel, const Skeleton& sigma,
                                           const CriticalData& crit, const ProjectiveContext& ctx) {
  std::vector<IdealGenerator> out;
  for (std::size_t r = 0; r < ctx.slot_count(); ++r) {
    if (ctx.slot_vertex(r) != rel.source()) continue;
    if (!sigma.contains(ModPath{r, Path::trivial(ctx.slot_vertex(r))})) continue;
    FreeElement y;
    for (const auto& t : rel.terms) accumulate(y, ModPath{r, t.path}, Polynomial(t.coeff));
    for (auto& [path, poly] : normal_form(y, sigma, crit, ctx)) {
      out.push_back(IdealGenerator{std::move(poly), rel_index, r, path});
    }
  }
  return out;
}

}  // namespace

SigmaIdeal sigma_ideal(const Skeleton& sigma, const CriticalData& crit, const ProjectiveContext& ctx,
                       std::size_t parallel) {
  const auto& effective = ctx.algebra().effective_relations();
  std::vector<std::vector<IdealGenerator>> per_relation(effective.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min(parallel, effective.size()));
  auto run = [&](std::size_t w) {
    for (std::size_t i = w; i < effective.size(); i += workers) {
      per_relation[i] = generators_for(i, effective[i].relation, sigma, crit, ctx);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }
  SigmaIdeal ideal;
  ideal.variable_count = crit.size();
  ideal.free_from = crit.n1;
  for (auto& gens : per_relation)
    for (auto& g : gens) ideal.generators.push_back(std::move(g));
  return ideal;
}

SigmaIdeal big_presentation(const Skeleton& sigma, const CriticalData& crit, const ProjectiveContext& ctx,
                            std::size_t parallel) {
  SigmaIdeal ideal = sigma_ideal(sigma, crit, ctx, parallel);
  for (const auto& g : ideal.generators) {
    if (g.poly.variable_bound() > ideal.free_from) {
      fail(ErrorCode::Internal, "a generator involves a free coordinate");
    }
  }
  return ideal;
}

PointData PointData::zeros(std::size_t n) {
  PointData p;
  p.values.assign(n, Rational(0));
  return p;
}

PointData PointData::with_zero_default() const {
  PointData p = *this;
  for (auto& v : p.values)
    if (!v) v = Rational(0);
  return p;
}

std::vector<Rational> PointData::dense() const {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i]) fail(ErrorCode::MissingCoordinate, "no value for X[" + std::to_string(i) + "]");
    out.push_back(*values[i]);
  }
  return out;
}

bool evaluate_membership(const SigmaIdeal& ideal, const PointData& point) {
  if (point.values.size() < ideal.variable_count) {
    fail(ErrorCode::MissingCoordinate, "point has " + std::to_string(point.values.size()) + " coordinates, expected " +
                                           std::to_string(ideal.variable_count));
  }
  const std::vector<Rational> x = point.dense();
  for (const auto& g : ideal.generators) {
    if (sgn(g.poly.evaluate(x)) != 0) return false;
  }
  return true;
}

}  // namespace qg
