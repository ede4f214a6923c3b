// Command line front end: reads algebra, skeleton, point, module, submodule
// and curve files, runs one computation and writes a deterministic result
// together with a run manifest.

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quivergrass/algebra.hpp"
#include "quivergrass/degeneration.hpp"
#include "quivergrass/equations.hpp"
#include "quivergrass/error.hpp"
#include "quivergrass/io.hpp"
#include "quivergrass/layering.hpp"
#include "quivergrass/realize.hpp"
#include "quivergrass/skeleta.hpp"

namespace {

constexpr const char* kVersion = "0.3.0";

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitInternal = 4;

struct Infeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) qg::fail(qg::ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    qg::fail(qg::ErrorCode::Internal, "sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

struct Run {
  std::string command;
  std::uint64_t seed = 0;
  std::size_t parallel = 1;
  std::string out_path;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, contents
  std::vector<std::pair<std::string, std::string>> parameters;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  std::string input(const std::string& path) {
    std::string text = read_file(path);
    inputs.emplace_back(path, text);
    return text;
  }

  void emit(const std::string& body) const {
    if (out_path.empty()) {
      std::cout << body;
      return;
    }
    std::ofstream(out_path, std::ios::binary) << body;
    nlohmann::ordered_json manifest;
    manifest["command"] = command;
    manifest["tool_version"] = kVersion;
    manifest["seed"] = seed;
    manifest["parallel"] = parallel;
    manifest["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : parameters) manifest["parameters"][k] = v;
    manifest["inputs"] = nlohmann::ordered_json::array();
    for (const auto& [path, text] : inputs)
      manifest["inputs"].push_back({{"path", path}, {"sha256", sha256_hex(text)}});
    manifest["output"] = {{"path", out_path}, {"sha256", sha256_hex(body)}};
    const auto elapsed = std::chrono::steady_clock::now() - start;
    manifest["wall_time_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    std::ofstream(out_path + ".manifest.json", std::ios::binary) << manifest.dump(2) << "\n";
  }
};

std::string join_dims(const qg::DimensionVector& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string format_vector(const qg::Vec& v, const qg::ProjectiveModel& model) {
  const auto& quiver = model.algebra().quiver();
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + qg::format_rational(v[i]) + ") [" + quiver.format(model.basis()[i]) + "]";
  }
  return out.empty() ? "0" : out;
}

qg::Skeleton pick_skeleton(const qg::SkeletonFile& file, std::size_t index) {
  if (index == 0 || index > file.skeleta.size())
    qg::fail(qg::ErrorCode::InvalidSkeleton, "skeleton index " + std::to_string(index) + " out of range (file has " +
                                                 std::to_string(file.skeleta.size()) + ")");
  return file.skeleta[index - 1];
}

// info ---------------------------------------------------------------------

std::string cmd_info(const qg::Algebra& algebra) {
  const auto& quiver = algebra.quiver();
  const auto report = qg::validate(algebra);
  std::ostringstream out;
  out << "vertices: " << quiver.vertex_count() << "\n";
  out << "arrows: " << quiver.arrow_count() << "\n";
  out << "loewy_bound: " << algebra.loewy_bound() << "\n";
  out << "relations: declared " << report.declared << ", right multiples " << report.right_multiples
      << ", length bound " << report.length_bound_paths << ", effective " << report.effective() << "\n";
  for (std::uint32_t i = 0; i < quiver.vertex_count(); ++i) {
    const qg::VertexId v{i};
    const auto layers = qg::projective_radical_layers(algebra, {v});
    qg::DimensionVector sizes;
    for (const auto& layer : layers.layers) {
      std::size_t s = 0;
      for (auto d : layer) s += d;
      sizes.push_back(s);
    }
    while (sizes.size() > 1 && sizes.back() == 0) sizes.pop_back();
    out << "dim Lambda e_" << quiver.vertex_name(v) << " = " << layers.total() << "; layers " << join_dims(sizes, ",")
        << "\n";
  }
  out << "dim e_j Lambda e_i (row j, column i):\n";
  std::vector<qg::DimensionVector> columns;
  for (std::uint32_t i = 0; i < quiver.vertex_count(); ++i)
    columns.push_back(qg::projective_radical_layers(algebra, {qg::VertexId{i}}).dimension_vector());
  for (std::uint32_t j = 0; j < quiver.vertex_count(); ++j) {
    out << "  " << quiver.vertex_name(qg::VertexId{j}) << ":";
    for (std::uint32_t i = 0; i < quiver.vertex_count(); ++i) out << " " << columns[i][j];
    out << "\n";
  }
  return out.str();
}

// skeleta ------------------------------------------------------------------

std::string cmd_skeleta(std::shared_ptr<const qg::Algebra> algebra, const qg::SemisimpleSequence& s,
                        const std::string& setting, bool dedupe, std::size_t parallel, bool require_nonempty) {
  const auto ctx = setting == "big" ? qg::ProjectiveContext::big(algebra, s.dimension_vector())
                                    : qg::ProjectiveContext::small(algebra, s.top());
  qg::EnumerationOptions options;
  options.dedupe = dedupe;
  options.parallel = parallel;
  const auto skeleta = qg::enumerate_skeleta(ctx, s, options);
  if (skeleta.empty() && require_nonempty)
    throw Infeasible("no skeleton is compatible with " + qg::format_sequence(s));
  return qg::format_skeleta(skeleta, ctx);
}

// equations ----------------------------------------------------------------

std::string cmd_equations(std::shared_ptr<const qg::Algebra> algebra, const qg::SkeletonFile& file,
                          std::size_t index, const std::string& format, std::size_t parallel) {
  const auto ctx = qg::context_of(file, algebra);
  const auto sigma = pick_skeleton(file, index);
  std::string reason;
  if (!qg::is_skeleton(sigma, ctx, &reason)) qg::fail(qg::ErrorCode::InvalidSkeleton, reason);
  const auto crit = qg::critical_data(sigma, ctx);
  const auto ideal = ctx.setting() == qg::Setting::Big ? qg::big_presentation(sigma, crit, ctx, parallel)
                                                       : qg::sigma_ideal(sigma, crit, ctx, parallel);
  const auto& quiver = algebra->quiver();
  return format == "json" ? qg::format_ideal_json(ideal, crit, quiver) : qg::format_ideal_text(ideal, crit, quiver);
}

// check-point / realize ----------------------------------------------------

struct PointSetup {
  qg::ProjectiveContext ctx;
  qg::Skeleton sigma;
  qg::CriticalData crit;
  qg::PointData point;
};

PointSetup load_point(std::shared_ptr<const qg::Algebra> algebra, const qg::SkeletonFile& file, std::size_t index,
                      const std::string& point_text) {
  auto ctx = qg::context_of(file, algebra);
  auto sigma = pick_skeleton(file, index);
  std::string reason;
  if (!qg::is_skeleton(sigma, ctx, &reason)) qg::fail(qg::ErrorCode::InvalidSkeleton, reason);
  auto crit = qg::critical_data(sigma, ctx);
  auto point = qg::parse_point(point_text);
  if (point.values.size() != crit.size())
    qg::fail(qg::ErrorCode::DimensionMismatch, "point has " + std::to_string(point.values.size()) +
                                                   " coordinates, the chart has " + std::to_string(crit.size()));
  return {std::move(ctx), std::move(sigma), std::move(crit), std::move(point)};
}

std::string cmd_check_point(const PointSetup& p, std::size_t parallel) {
  const auto ideal = p.ctx.setting() == qg::Setting::Big ? qg::big_presentation(p.sigma, p.crit, p.ctx, parallel)
                                                         : qg::sigma_ideal(p.sigma, p.crit, p.ctx, parallel);
  const auto dense = p.point.dense();
  std::ostringstream out;
  std::size_t failing = 0;
  for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
    const auto value = ideal.generators[i].poly.evaluate(dense);
    if (value != 0) {
      if (failing == 0) out << "violated generators:\n";
      out << "  " << i + 1 << ": " << ideal.generators[i].poly.to_string() << " = " << qg::format_rational(value)
          << "\n";
      ++failing;
    }
  }
  const bool member = qg::evaluate_membership(ideal, p.point);
  return std::string("verdict: ") + (member ? "member" : "not-member") + "\n" + out.str();
}

std::string cmd_realize(const PointSetup& p) {
  const auto m = qg::realize_point(p.sigma, p.crit, p.ctx, p.point);
  const auto& algebra = p.ctx.algebra();
  std::ostringstream out;
  out << qg::format_module(m, algebra.quiver());
  if (const auto witness = qg::relations_check(m, algebra)) {
    out << "# relations: violated (effective relation " << witness->relation + 1 << ")\n";
  } else {
    out << "# relations: satisfied\n";
    out << "# layering: " << qg::format_sequence(qg::layering_of(m, algebra)) << "\n";
  }
  out << "# skeleton sequence: " << qg::format_sequence(qg::compatible_sequence(p.sigma, p.ctx)) << "\n";
  return out.str();
}

// degenerate ---------------------------------------------------------------

std::string cmd_degenerate(const qg::Algebra& algebra, const qg::SubmoduleFile& sub,
                           const std::vector<qg::UnipotentCurve>& curves, std::size_t steps, std::uint64_t seed) {
  const qg::ProjectiveModel model(algebra, sub.slots);
  qg::SubmodulePresentation c = qg::to_presentation(sub, model);
  if (steps == 0 || steps > curves.size()) steps = curves.size();
  qg::IsoProbeOptions iso;
  iso.seed = seed;
  std::ostringstream out;
  out << "# quivergrass degeneration\n";
  out << "ambient: " << model.dimension() << "\n";
  for (std::size_t k = 0; k < steps; ++k) {
    const auto report = qg::unipotent_degenerate(model, c, curves[k], iso);
    out << "step " << k + 1 << "\n";
    out << "curve:\n" << qg::format_curve(curves[k], algebra.quiver());
    out << "before: " << qg::format_sequence(report.before_layers) << "\n";
    out << "after: " << qg::format_sequence(report.after_layers) << "\n";
    out << "dominance: " << qg::to_string(report.verdict) << "\n";
    out << "iso: " << qg::to_string(report.iso.verdict);
    if (!report.iso.reason.empty()) out << " (" << report.iso.reason << ")";
    out << "\n";
    out << "limit: " << report.limit.size() << "\n";
    for (const auto& v : report.limit) out << "  " << format_vector(v, model) << "\n";
    c.generators = report.limit;
  }
  return out.str();
}

// dominance ----------------------------------------------------------------

qg::SemisimpleSequence sequence_arg(Run& run, const std::string& value) {
  if (!value.empty() && value[0] == '@') return qg::parse_sequence(run.input(value.substr(1)));
  return qg::parse_sequence(value);
}

std::string cmd_dominance(const qg::SemisimpleSequence& a, const qg::SemisimpleSequence& b) {
  const bool ab = qg::dominates(a, b);
  const bool ba = qg::dominates(b, a);
  std::string verdict = a == b ? "equal" : ab ? "a-dominates-b" : ba ? "b-dominates-a" : "incomparable";
  return "a: " + qg::format_sequence(a) + "\nb: " + qg::format_sequence(b) + "\nverdict: " + verdict + "\n";
}

int exit_code_of(qg::ErrorCode code) {
  switch (code) {
    case qg::ErrorCode::RankDrop:
      return kExitInfeasible;
    case qg::ErrorCode::Internal:
    case qg::ErrorCode::Cancelled:
      return kExitInternal;
    default:
      return kExitValidation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skeleta, affine chart equations and unipotent degenerations for truncated path algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Run run;
  app.add_option("--seed", run.seed, "Seed for randomized probes (QUIVERGRASS_SEED overrides)");
  app.add_option("--parallel", run.parallel, "Upper bound on worker threads")->check(CLI::PositiveNumber);

  std::string algebra_path, sequence_text, setting = "small", skeleton_path, point_path, format = "text";
  std::string submodule_path, curve_path, seq_a, seq_b;
  std::size_t index = 1, steps = 0;
  bool dedupe = false, require_nonempty = false;

  auto* info = app.add_subcommand("info", "Dimensions, radical layers and relation counts of an algebra");
  info->add_option("algebra", algebra_path)->required();
  info->add_option("--out", run.out_path);

  auto* skeleta = app.add_subcommand("skeleta", "Enumerate skeleta compatible with a semisimple sequence");
  skeleta->alias("skeletons");
  skeleta->add_option("algebra", algebra_path)->required();
  skeleta->add_option("--sequence", sequence_text, "Sequence literal or @file")->required();
  skeleta->add_option("--setting", setting)->check(CLI::IsMember({"small", "big"}));
  skeleta->add_flag("--dedupe", dedupe, "Keep one skeleton per slot relabeling class");
  skeleta->add_flag("--require-nonempty", require_nonempty);
  skeleta->add_option("--out", run.out_path);

  auto* equations = app.add_subcommand("equations", "Ideal cutting out the affine chart of a skeleton");
  equations->add_option("algebra", algebra_path)->required();
  equations->add_option("--skeleton", skeleton_path)->required();
  equations->add_option("--index", index, "1-based skeleton in the file");
  equations->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  equations->add_option("--out", run.out_path);

  auto* check_point = app.add_subcommand("check-point", "Decide whether a point lies on the affine chart");
  check_point->add_option("algebra", algebra_path)->required();
  check_point->add_option("--skeleton", skeleton_path)->required();
  check_point->add_option("--index", index);
  check_point->add_option("--point", point_path)->required();
  check_point->add_option("--out", run.out_path);

  auto* realize = app.add_subcommand("realize", "Module attached to a point of the affine chart");
  realize->add_option("algebra", algebra_path)->required();
  realize->add_option("--skeleton", skeleton_path)->required();
  realize->add_option("--index", index);
  realize->add_option("--point", point_path)->required();
  realize->add_option("--out", run.out_path);

  auto* degenerate = app.add_subcommand("degenerate", "Limit of a submodule along unipotent curves");
  degenerate->add_option("algebra", algebra_path)->required();
  degenerate->add_option("--submodule", submodule_path)->required();
  degenerate->add_option("--curve", curve_path)->required();
  degenerate->add_option("--steps", steps, "Number of curves applied in sequence (default all)");
  degenerate->add_option("--out", run.out_path);

  auto* dominance = app.add_subcommand("dominance", "Compare two semisimple sequences");
  dominance->add_option("--seq-a", seq_a, "Sequence literal or @file")->required();
  dominance->add_option("--seq-b", seq_b, "Sequence literal or @file")->required();
  dominance->add_option("--out", run.out_path);

  CLI11_PARSE(app, argc, argv);

  if (const char* env = std::getenv("QUIVERGRASS_SEED")) {
    try {
      run.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: QUIVERGRASS_SEED is not an unsigned integer: " << env << "\n";
      return kExitValidation;
    }
  }

  try {
    run.command = app.get_subcommands().front()->get_name();
    auto load_algebra = [&] { return std::make_shared<const qg::Algebra>(qg::parse_algebra(run.input(algebra_path))); };
    std::string body;
    if (*info) {
      body = cmd_info(*load_algebra());
    } else if (*skeleta) {
      const auto algebra = load_algebra();
      const auto s = sequence_arg(run, sequence_text);
      run.parameters = {{"sequence", qg::format_sequence(s)}, {"setting", setting}, {"dedupe", dedupe ? "yes" : "no"}};
      body = cmd_skeleta(algebra, s, setting, dedupe, run.parallel, require_nonempty);
    } else if (*equations) {
      const auto algebra = load_algebra();
      const auto file = qg::parse_skeleta(run.input(skeleton_path), algebra->quiver());
      run.parameters = {{"index", std::to_string(index)}, {"format", format}};
      body = cmd_equations(algebra, file, index, format, run.parallel);
    } else if (*check_point || *realize) {
      const auto algebra = load_algebra();
      const auto file = qg::parse_skeleta(run.input(skeleton_path), algebra->quiver());
      const auto setup = load_point(algebra, file, index, run.input(point_path));
      run.parameters = {{"index", std::to_string(index)}};
      body = *check_point ? cmd_check_point(setup, run.parallel) : cmd_realize(setup);
    } else if (*degenerate) {
      const auto algebra = load_algebra();
      const auto sub = qg::parse_submodule(run.input(submodule_path), algebra->quiver());
      const auto curves = qg::parse_curves(run.input(curve_path), algebra->quiver(), sub.slots);
      run.parameters = {{"steps", std::to_string(steps)}};
      body = cmd_degenerate(*algebra, sub, curves, steps, run.seed);
    } else if (*dominance) {
      const auto a = sequence_arg(run, seq_a);
      const auto b = sequence_arg(run, seq_b);
      body = cmd_dominance(a, b);
    }
    run.emit(body);
    return kExitOk;
  } catch (const Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const qg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_of(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
