#include "quivergrass/degeneration.hpp"

#include "quivergrass/error.hpp"

namespace qg {

void validate_curve(const UnipotentCurve& curve, const ProjectiveModel& model) {
  const auto& slots = model.slot_vertices();
  const Quiver& quiver = model.algebra().quiver();
  if (curve.slot_terms.size() > slots.size()) fail(ErrorCode::InvalidCurve, "curve lists more slots than the projective has");
  for (std::size_t r = 0; r < curve.slot_terms.size(); ++r) {
    for (const auto& t : curve.slot_terms[r]) {
      if (t.target_slot >= slots.size()) fail(ErrorCode::InvalidCurve, "curve term refers to a missing slot");
      if (t.path.is_trivial()) fail(ErrorCode::InvalidCurve, "curve term on slot " + std::to_string(r + 1) + " has a trivial path");
      if (t.path.source != slots[t.target_slot] || t.path.target != slots[r]) {
        fail(ErrorCode::EndpointMismatch, "curve path '" + quiver.format(t.path) + "' does not run from slot " +
                                              std::to_string(t.target_slot + 1) + " to slot " + std::to_string(r + 1));
      }
    }
  }
}

SubspaceFamily apply_curve(const UnipotentCurve& curve, const SubmodulePresentation& c, const ProjectiveModel& model) {
  validate_curve(curve, model);
  const std::size_t n = model.dimension();
  // Column b of g_tau as sparse (row, coefficient) pairs.
  std::vector<std::vector<std::pair<std::size_t, RationalFunction>>> g(n);
  for (std::size_t b = 0; b < n; ++b) {
    const ModPath& basis = model.basis()[b];
    std::map<std::size_t, RationalFunction> column{{b, RationalFunction(Rational(1))}};
    if (basis.slot < curve.slot_terms.size()) {
      for (const auto& t : curve.slot_terms[basis.slot]) {
        Vec image = model.project(ModPath{t.target_slot, compose(basis.path, t.path)});
        for (std::size_t i = 0; i < n; ++i) {
          if (sgn(image[i]) == 0) continue;
          column[i] = column[i] + t.coeff * RationalFunction(image[i]);
        }
      }
    }
    for (auto& [i, f] : column)
      if (!f.is_zero()) g[b].emplace_back(i, f);
  }

  SubspaceFamily family;
  family.ambient = n;
  for (const auto& v : global_basis(model, submodule_generated(model, c.generators))) {
    std::vector<RationalFunction> image(n);
    for (std::size_t b = 0; b < n; ++b) {
      if (sgn(v[b]) == 0) continue;
      for (const auto& [i, f] : g[b]) image[i] = image[i] + f * RationalFunction(v[b]);
    }
    UPoly common(Rational(1));
    for (const auto& f : image) {
      const UPoly& d = f.denominator();
      common = common * d.divmod(gcd(common, d)).first;
    }
    std::vector<UPoly> row;
    for (const auto& f : image) row.push_back(f.numerator() * common.divmod(f.denominator()).first);
    family.rows.push_back(std::move(row));
  }
  return family;
}

namespace {

// Certifies independence over K(tau) by finding a specialization where the
// rows stay independent.
bool certify_rank(const SubspaceFamily& family) {
  const std::size_t k = family.rows.size();
  if (k == 0) return true;
  for (long t = 0; t < 64; ++t) {
    const Rational tau = Rational(t % 2 == 0 ? t / 2 + 1 : -(t / 2) - 2, 1 + t / 7);
    Matrix m(k, family.ambient);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < family.ambient; ++j) m(i, j) = family.rows[i][j].evaluate(tau);
    if (rank(m) == k) return true;
  }
  return false;
}

std::vector<UPoly> normalized(std::vector<UPoly> row) {
  std::size_t v = static_cast<std::size_t>(-1);
  for (const auto& p : row)
    if (!p.is_zero()) v = std::min(v, p.valuation());
  if (v == static_cast<std::size_t>(-1)) fail(ErrorCode::RankDrop, "a row of the family vanished");
  for (auto& p : row) p = p.shift_down(v);
  return row;
}

}  // namespace

std::vector<Vec> limit_at_infinity(const SubspaceFamily& family, std::stop_token stop) {
  if (!certify_rank(family)) fail(ErrorCode::RankDrop, "rows of the family are not independent over K(tau)");
  const std::size_t k = family.rows.size();
  const std::size_t n = family.ambient;

  // Rows in s = 1/tau, scaled to have valuation zero.
  std::vector<std::vector<UPoly>> rows;
  for (const auto& row : family.rows) {
    long degree = -1;
    for (const auto& p : row) degree = std::max(degree, p.degree());
    std::vector<UPoly> r;
    for (const auto& p : row) r.push_back(p.reversed(static_cast<std::size_t>(degree)));
    rows.push_back(normalized(std::move(r)));
  }

  auto constants = [&] {
    Matrix m(k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j].coeff(0);
    return m;
  };

  std::size_t budget = 1;
  for (const auto& row : rows)
    for (const auto& p : row) budget += static_cast<std::size_t>(std::max(0L, p.degree()));
  while (true) {
    if (stop.stop_requested()) fail(ErrorCode::Cancelled, "limit computation cancelled");
    const Matrix a0 = constants();
    const Matrix relations = nullspace(a0.transpose());
    if (relations.cols() == 0) {
      RowSpace limit(n);
      for (std::size_t i = 0; i < k; ++i) limit.insert(a0.row(i));
      return limit.basis();
    }
    if (budget-- == 0) fail(ErrorCode::Internal, "saturation did not terminate");
    const Vec lambda = relations.column(0);
    std::size_t pivot = k;
    for (std::size_t i = k; i-- > 0;) {
      if (sgn(lambda[i]) != 0) {
        pivot = i;
        break;
      }
    }
    std::vector<UPoly> combined(n);
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(lambda[i]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) combined[j] = combined[j] + rows[i][j] * lambda[i];
    }
    rows[pivot] = normalized(std::move(combined));
  }
}

std::string_view to_string(DominanceVerdict v) {
  switch (v) {
    case DominanceVerdict::Equal: return "equal";
    case DominanceVerdict::StrictlyDominates: return "strictly-dominates";
    case DominanceVerdict::Violates: return "violates";
  }
  return "unknown";
}

DominanceVerdict verify_dominance(const SemisimpleSequence& before, const SemisimpleSequence& after) {
  if (before == after) return DominanceVerdict::Equal;
  return dominates(after, before) ? DominanceVerdict::StrictlyDominates : DominanceVerdict::Violates;
}

DominanceVerdict verify_dominance(const ModuleRealization& before, const ModuleRealization& after, const Algebra& algebra) {
  return verify_dominance(layering_of(before, algebra), layering_of(after, algebra));
}

ModuleRealization quotient_module(const ProjectiveModel& model, const SubmodulePresentation& c) {
  const ModuleRealization q = model.realization();
  return quotient_by(model.algebra().quiver(), q, submodule_generated(model, c.generators));
}

DegenerationReport unipotent_degenerate(const ProjectiveModel& model, const SubmodulePresentation& c,
                                        const UnipotentCurve& curve, const IsoProbeOptions& iso_options,
                                        std::stop_token stop) {
  const Algebra& algebra = model.algebra();
  DegenerationReport report;
  report.limit = limit_at_infinity(apply_curve(curve, c, model), stop);
  report.before = quotient_module(model, c);
  report.after = quotient_module(model, SubmodulePresentation{report.limit});
  report.before_layers = layering_of(report.before, algebra);
  report.after_layers = layering_of(report.after, algebra);
  report.verdict = verify_dominance(report.before_layers, report.after_layers);
  report.iso = iso_probe(algebra.quiver(), report.before, report.after, iso_options);
  return report;
}

}  // namespace qg
