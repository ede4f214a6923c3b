#include "quivergrass/io.hpp"

#include <json.hpp>
#include <sstream>

#include "quivergrass/error.hpp"

namespace qg {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

std::string location(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

// Best-effort position of a quoted token for messages about semantic errors.
std::string locate(const std::string& text, const std::string& token) {
  auto pos = text.find("\"" + token + "\"");
  if (pos == std::string::npos) pos = text.find(token);
  return pos == std::string::npos ? std::string("unknown position") : location(text, pos);
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, what + ": malformed JSON at " + location(text, e.byte) + ": " + e.what());
  }
}

void only_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& what) {
  if (!obj.is_object()) fail(ErrorCode::ParseError, what + " must be a JSON object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) fail(ErrorCode::ParseError, what + " has unknown key '" + key + "'");
  }
  for (const char* a : allowed) {
    if (!obj.contains(a)) fail(ErrorCode::ParseError, what + " is missing key '" + std::string(a) + "'");
  }
}

std::string identifier(const json& v, const std::string& what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  fail(ErrorCode::ParseError, what + " must be a string identifier");
}

Rational rational_field(const json& v, const std::string& text) {
  const std::string token = v.is_string() ? v.get<std::string>() : v.dump();
  if (!v.is_string() && !v.is_number_integer()) {
    fail(ErrorCode::ParseError, "coefficient '" + token + "' must be a \"p/q\" string at " + locate(text, token));
  }
  try {
    return parse_rational(token);
  } catch (const Error&) {
    fail(ErrorCode::ParseError, "bad rational token '" + token + "' at " + locate(text, token));
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

[[noreturn]] void line_error(std::size_t line, const std::string& what) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

// "r: a.b" or "r:" with r counted from 1.
ModPath parse_modpath(const std::string& text, const Quiver& quiver, const std::vector<VertexId>& slots, std::size_t line) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) line_error(line, "expected 'slot: path' in '" + text + "'");
  std::size_t slot = 0;
  try {
    slot = std::stoul(trim(text.substr(0, colon)));
  } catch (const std::exception&) {
    line_error(line, "bad slot number in '" + text + "'");
  }
  if (slot == 0 || slot > slots.size()) line_error(line, "slot " + std::to_string(slot) + " out of range");
  const std::string rest = trim(text.substr(colon + 1));
  std::vector<std::string> arrows;
  if (!rest.empty()) {
    for (auto& a : split(rest, '.')) arrows.push_back(trim(a));
  }
  try {
    return ModPath{slot - 1, quiver.path(slots[slot - 1], arrows)};
  } catch (const Error& e) {
    line_error(line, e.what());
  }
}

}  // namespace

Algebra parse_algebra(const std::string& text) {
  const json doc = parse_json(text, "algebra file");
  only_keys(doc, {"vertices", "arrows", "loewy_bound", "relations"}, "algebra file");

  std::vector<std::string> vertices;
  if (!doc["vertices"].is_array()) fail(ErrorCode::ParseError, "'vertices' must be an array");
  for (const auto& v : doc["vertices"]) vertices.push_back(identifier(v, "vertex"));

  std::unordered_map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
  std::vector<Arrow> arrows;
  if (!doc["arrows"].is_array()) fail(ErrorCode::ParseError, "'arrows' must be an array");
  for (const auto& a : doc["arrows"]) {
    only_keys(a, {"name", "from", "to"}, "arrow");
    const std::string name = identifier(a["name"], "arrow name");
    const std::string from = identifier(a["from"], "arrow source");
    const std::string to = identifier(a["to"], "arrow target");
    if (!index.count(from) || !index.count(to)) {
      fail(ErrorCode::ParseError, "arrow '" + name + "' uses an undeclared vertex at " + locate(text, name));
    }
    arrows.push_back(Arrow{name, VertexId{index[from]}, VertexId{index[to]}});
  }
  Quiver quiver(std::move(vertices), std::move(arrows));

  const json& bound = doc["loewy_bound"];
  if (!bound.is_number_unsigned() && !(bound.is_number_integer() && bound.get<long long>() >= 0)) {
    fail(ErrorCode::ParseError, "'loewy_bound' must be a non-negative integer");
  }
  const auto loewy = bound.get<std::size_t>();

  std::vector<Relation> relations;
  if (!doc["relations"].is_array()) fail(ErrorCode::ParseError, "'relations' must be an array");
  for (const auto& r : doc["relations"]) {
    if (!r.is_array()) fail(ErrorCode::ParseError, "each relation must be an array of terms");
    Relation rel;
    for (const auto& t : r) {
      only_keys(t, {"coeff", "path"}, "relation term");
      Rational coeff = rational_field(t["coeff"], text);
      std::vector<std::string> names;
      if (!t["path"].is_array()) fail(ErrorCode::ParseError, "term path must be an array of arrow names");
      for (const auto& n : t["path"]) names.push_back(identifier(n, "arrow name"));
      if (names.empty()) fail(ErrorCode::ShortRelation, "relation term with an empty path");
      for (const auto& n : names) {
        if (!quiver.has_arrow(n)) fail(ErrorCode::ParseError, "unknown arrow '" + n + "' at " + locate(text, n));
      }
      rel.terms.push_back(RelationTerm{std::move(coeff), quiver.path(names)});
    }
    relations.push_back(std::move(rel));
  }
  return Algebra(std::move(quiver), std::move(relations), loewy);
}

std::string format_algebra(const Algebra& algebra) {
  const Quiver& q = algebra.quiver();
  ordered doc;
  doc["vertices"] = q.vertex_names();
  doc["arrows"] = ordered::array();
  for (const auto& a : q.arrows()) {
    doc["arrows"].push_back(ordered{{"name", a.name}, {"from", q.vertex_name(a.source)}, {"to", q.vertex_name(a.target)}});
  }
  doc["loewy_bound"] = algebra.loewy_bound();
  doc["relations"] = ordered::array();
  for (const auto& r : algebra.relations()) {
    ordered terms = ordered::array();
    for (const auto& t : r.terms) {
      ordered names = ordered::array();
      for (ArrowId a : t.path.arrows) names.push_back(q.arrow(a).name);
      terms.push_back(ordered{{"coeff", format_rational(t.coeff)}, {"path", names}});
    }
    doc["relations"].push_back(terms);
  }
  return doc.dump(2) + "\n";
}

SemisimpleSequence parse_sequence(const std::string& text) {
  const json doc = parse_json(text, "sequence literal");
  if (!doc.is_array()) fail(ErrorCode::ParseError, "sequence literal must be a list of layers");
  SemisimpleSequence s;
  for (const auto& layer : doc) {
    if (!layer.is_array()) fail(ErrorCode::ParseError, "each layer must be a list of multiplicities");
    DimensionVector d;
    for (const auto& x : layer) {
      if (!x.is_number_integer() || x.get<long long>() < 0) {
        fail(ErrorCode::ParseError, "multiplicity '" + x.dump() + "' is not a non-negative integer");
      }
      d.push_back(x.get<std::size_t>());
    }
    if (!s.layers.empty() && d.size() != s.layers.front().size()) {
      fail(ErrorCode::ParseError, "layer " + std::to_string(s.layers.size() + 1) + " has " + std::to_string(d.size()) +
                                      " entries but layer 1 has " + std::to_string(s.layers.front().size()));
    }
    s.layers.push_back(std::move(d));
  }
  return s;
}

std::string format_skeleta(const std::vector<Skeleton>& skeleta, const ProjectiveContext& ctx) {
  const Quiver& quiver = ctx.algebra().quiver();
  std::string out = "# quivergrass skeleta\n";
  out += "# setting: " + std::string(to_string(ctx.setting())) + "\n";
  out += "# slots:";
  for (VertexId v : ctx.slot_vertices()) out += " " + quiver.vertex_name(v);
  out += "\n# count: " + std::to_string(skeleta.size()) + "\n";
  for (std::size_t k = 0; k < skeleta.size(); ++k) {
    out += "\n# skeleton " + std::to_string(k + 1) + "\n";
    for (const auto& p : skeleta[k]) out += quiver.format(p) + "\n";
  }
  return out;
}

SkeletonFile parse_skeleta(const std::string& text, const Quiver& quiver) {
  SkeletonFile file;
  bool have_slots = false;
  std::vector<ModPath> current;
  bool open = false;
  auto flush = [&] {
    if (open) file.skeleta.emplace_back(std::move(current));
    current.clear();
    open = false;
  };
  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string line = trim(lines[i]);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string body = trim(line.substr(1));
      if (body.rfind("setting:", 0) == 0) {
        const std::string s = trim(body.substr(8));
        if (s == "small") file.setting = Setting::Small;
        else if (s == "big") file.setting = Setting::Big;
        else if (s == "general") file.setting = Setting::General;
        else line_error(i + 1, "unknown setting '" + s + "'");
      } else if (body.rfind("slots:", 0) == 0) {
        for (const auto& w : words(body.substr(6))) {
          if (!quiver.has_vertex(w)) line_error(i + 1, "unknown vertex '" + w + "'");
          file.slots.push_back(quiver.vertex(w));
        }
        have_slots = true;
      } else if (body.rfind("skeleton", 0) == 0) {
        flush();
        open = true;
      }
      continue;
    }
    if (!have_slots) line_error(i + 1, "path listed before the '# slots:' directive");
    open = true;
    current.push_back(parse_modpath(line, quiver, file.slots, i + 1));
  }
  flush();
  return file;
}

ProjectiveContext context_of(const SkeletonFile& file, std::shared_ptr<const Algebra> algebra) {
  switch (file.setting) {
    case Setting::Small: {
      DimensionVector top(algebra->quiver().vertex_count(), 0);
      for (VertexId v : file.slots) ++top[v.index];
      auto ctx = ProjectiveContext::small(algebra, top);
      if (ctx.slot_vertices() != file.slots) fail(ErrorCode::ParseError, "small-setting slots must be grouped by vertex");
      return ctx;
    }
    case Setting::Big: {
      DimensionVector d(algebra->quiver().vertex_count(), 0);
      for (VertexId v : file.slots) ++d[v.index];
      auto ctx = ProjectiveContext::big(algebra, d);
      if (ctx.slot_vertices() != file.slots) fail(ErrorCode::ParseError, "big-setting slots must be grouped by vertex");
      return ctx;
    }
    case Setting::General: return ProjectiveContext::general(std::move(algebra), file.slots);
  }
  fail(ErrorCode::Internal, "unknown setting");
}

std::string format_ideal_text(const SigmaIdeal& ideal, const CriticalData& crit, const Quiver& quiver) {
  std::string out = "# quivergrass ideal\n";
  out += "variables: " + std::to_string(ideal.variable_count) + "\n";
  for (std::size_t i = 0; i < crit.variables.size(); ++i) {
    const auto& v = crit.variables[i];
    out += "X[" + std::to_string(i) + "] = X[" + quiver.format(crit.critical[v.critical].path) + " ; " +
           quiver.format(v.sigma) + "]\n";
  }
  out += "free: " + std::to_string(ideal.free_count()) + "\n";
  out += "generators: " + std::to_string(ideal.generators.size()) + "\n";
  for (const auto& g : ideal.generators) out += g.poly.to_string() + "\n";
  return out;
}

std::string format_ideal_json(const SigmaIdeal& ideal, const CriticalData& crit, const Quiver& quiver) {
  ordered doc;
  doc["variables"] = ordered::array();
  for (std::size_t i = 0; i < crit.variables.size(); ++i) {
    const auto& v = crit.variables[i];
    doc["variables"].push_back(ordered{{"index", i},
                                       {"critical", quiver.format(crit.critical[v.critical].path)},
                                       {"sigma", quiver.format(v.sigma)},
                                       {"free", i >= ideal.free_from}});
  }
  doc["generators"] = ordered::array();
  for (const auto& g : ideal.generators) {
    doc["generators"].push_back(ordered{{"polynomial", g.poly.to_string()},
                                        {"relation", g.relation + 1},
                                        {"slot", g.slot + 1},
                                        {"basis_path", quiver.format(g.basis_path)}});
  }
  return doc.dump(2) + "\n";
}

std::vector<Polynomial> parse_ideal_text(const std::string& text) {
  std::vector<Polynomial> out;
  bool in_generators = false;
  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string line = trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("generators:", 0) == 0) {
      in_generators = true;
      continue;
    }
    if (in_generators) out.push_back(parse_polynomial(line));
  }
  return out;
}

PointData parse_point(const std::string& text) {
  const json doc = parse_json(text, "point file");
  if (!doc.is_object() || !doc.contains("values")) fail(ErrorCode::ParseError, "point file needs a 'values' array");
  for (const auto& [key, value] : doc.items()) {
    if (key != "values" && key != "default") fail(ErrorCode::ParseError, "point file has unknown key '" + key + "'");
  }
  PointData p;
  for (const auto& v : doc["values"]) {
    if (v.is_null()) {
      p.values.emplace_back(std::nullopt);
    } else {
      p.values.emplace_back(rational_field(v, text));
    }
  }
  if (doc.contains("default")) {
    if (doc["default"] != "zero") fail(ErrorCode::ParseError, "only \"zero\" is supported as a default");
    p = p.with_zero_default();
  }
  return p;
}

std::string format_point(const PointData& point) {
  ordered doc;
  doc["values"] = ordered::array();
  for (const auto& v : point.values) {
    if (v) doc["values"].push_back(format_rational(*v));
    else doc["values"].push_back(nullptr);
  }
  return doc.dump(2) + "\n";
}

std::string format_module(const ModuleRealization& m, const Quiver& quiver) {
  check_shape(m, quiver);
  std::string out = "# quivergrass module\nvertices:";
  for (const auto& v : quiver.vertex_names()) out += " " + v;
  out += "\ndims:";
  for (auto d : m.vertex_dims) out += " " + std::to_string(d);
  out += "\n";
  for (std::uint32_t a = 0; a < quiver.arrow_count(); ++a) {
    const Matrix& x = m.arrow_maps[a];
    out += "arrow " + quiver.arrow(ArrowId{a}).name + ": " + std::to_string(x.rows()) + " x " + std::to_string(x.cols()) + "\n";
    for (std::size_t i = 0; i < x.rows(); ++i) {
      for (std::size_t j = 0; j < x.cols(); ++j) out += (j ? " " : "") + format_rational(x(i, j));
      out += "\n";
    }
  }
  for (const auto& t : m.tops) {
    out += "top " + quiver.vertex_name(t.vertex) + ":";
    for (const auto& x : t.vector) out += " " + format_rational(x);
    out += "\n";
  }
  return out;
}

ModuleRealization parse_module(const std::string& text, const Quiver& quiver) {
  ModuleRealization m;
  m.arrow_maps.assign(quiver.arrow_count(), Matrix());
  std::vector<bool> seen(quiver.arrow_count(), false);
  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string line = trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    const auto w = words(line);
    if (w[0] == "vertices:") {
      if (std::vector<std::string>(w.begin() + 1, w.end()) != quiver.vertex_names()) {
        line_error(i + 1, "vertex list differs from the algebra");
      }
    } else if (w[0] == "dims:") {
      for (std::size_t k = 1; k < w.size(); ++k) m.vertex_dims.push_back(std::stoul(w[k]));
    } else if (w[0] == "arrow") {
      if (w.size() != 5 || w[1].back() != ':' || w[3] != "x") line_error(i + 1, "expected 'arrow name: rows x cols'");
      const std::string name = w[1].substr(0, w[1].size() - 1);
      if (!quiver.has_arrow(name)) line_error(i + 1, "unknown arrow '" + name + "'");
      const auto a = quiver.arrow_id(name).index;
      const std::size_t rows = std::stoul(w[2]);
      const std::size_t cols = std::stoul(w[4]);
      Matrix x(rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        if (++i >= lines.size()) line_error(i, "matrix of arrow '" + name + "' is truncated");
        const auto entries = words(lines[i]);
        if (entries.size() != cols) line_error(i + 1, "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) x(r, c) = parse_rational(entries[c]);
      }
      m.arrow_maps[a] = std::move(x);
      seen[a] = true;
    } else if (w[0] == "top") {
      if (w.size() < 2 || w[1].back() != ':') line_error(i + 1, "expected 'top vertex: entries'");
      const std::string name = w[1].substr(0, w[1].size() - 1);
      if (!quiver.has_vertex(name)) line_error(i + 1, "unknown vertex '" + name + "'");
      TopElement t{quiver.vertex(name), {}};
      for (std::size_t k = 2; k < w.size(); ++k) t.vector.push_back(parse_rational(w[k]));
      m.tops.push_back(std::move(t));
    } else {
      line_error(i + 1, "unrecognized line '" + line + "'");
    }
  }
  for (std::uint32_t a = 0; a < quiver.arrow_count(); ++a) {
    if (!seen[a]) {
      const Arrow& arrow = quiver.arrow(ArrowId{a});
      if (m.vertex_dims.size() != quiver.vertex_count()) fail(ErrorCode::ParseError, "module file lacks a dims line");
      m.arrow_maps[a] = Matrix(m.vertex_dims[arrow.target.index], m.vertex_dims[arrow.source.index]);
    }
  }
  check_shape(m, quiver);
  return m;
}

SubmoduleFile parse_submodule(const std::string& text, const Quiver& quiver) {
  const json doc = parse_json(text, "submodule file");
  only_keys(doc, {"slots", "generators"}, "submodule file");
  SubmoduleFile file;
  for (const auto& s : doc["slots"]) {
    const std::string name = identifier(s, "slot vertex");
    if (!quiver.has_vertex(name)) fail(ErrorCode::ParseError, "unknown vertex '" + name + "' at " + locate(text, name));
    file.slots.push_back(quiver.vertex(name));
  }
  for (const auto& g : doc["generators"]) {
    std::vector<std::pair<Rational, ModPath>> terms;
    for (const auto& t : g) {
      only_keys(t, {"coeff", "slot", "path"}, "generator term");
      const auto slot = t["slot"].get<std::size_t>();
      if (slot == 0 || slot > file.slots.size()) fail(ErrorCode::ParseError, "generator slot out of range");
      std::vector<std::string> names;
      for (const auto& n : t["path"]) names.push_back(identifier(n, "arrow name"));
      terms.emplace_back(rational_field(t["coeff"], text), ModPath{slot - 1, quiver.path(file.slots[slot - 1], names)});
    }
    file.generators.push_back(std::move(terms));
  }
  return file;
}

SubmodulePresentation to_presentation(const SubmoduleFile& file, const ProjectiveModel& model) {
  if (file.slots != model.slot_vertices()) fail(ErrorCode::DimensionMismatch, "submodule slots differ from the projective");
  SubmodulePresentation c;
  for (const auto& g : file.generators) {
    Vec v(model.dimension());
    for (const auto& [coeff, p] : g) {
      Vec img = model.project(p);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += coeff * img[i];
    }
    c.generators.push_back(std::move(v));
  }
  return c;
}

std::vector<UnipotentCurve> parse_curves(const std::string& text, const Quiver& quiver, const std::vector<VertexId>& slots) {
  std::vector<UnipotentCurve> curves;
  UnipotentCurve current;
  current.slot_terms.resize(slots.size());
  bool any = false;
  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string line = trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    if (line == "---") {
      curves.push_back(std::move(current));
      current = UnipotentCurve{};
      current.slot_terms.resize(slots.size());
      any = false;
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) line_error(i + 1, "expected 'slot: terms'");
    std::size_t slot = 0;
    try {
      slot = std::stoul(trim(line.substr(0, colon)));
    } catch (const std::exception&) {
      line_error(i + 1, "bad slot number");
    }
    if (slot == 0 || slot > slots.size()) line_error(i + 1, "slot " + std::to_string(slot) + " out of range");
    for (const auto& raw : split(line.substr(colon + 1), ';')) {
      const std::string term = trim(raw);
      if (term.empty()) continue;
      const auto arrow = term.find("->");
      if (arrow == std::string::npos) line_error(i + 1, "term '" + term + "' lacks '-> slot'");
      const std::string lhs = trim(term.substr(0, arrow));
      std::size_t target = 0;
      try {
        target = std::stoul(trim(term.substr(arrow + 2)));
      } catch (const std::exception&) {
        line_error(i + 1, "bad target slot in '" + term + "'");
      }
      if (target == 0 || target > slots.size()) line_error(i + 1, "target slot out of range in '" + term + "'");
      const auto star = lhs.rfind('*');
      if (star == std::string::npos) line_error(i + 1, "term '" + term + "' lacks 'coeff * path'");
      std::vector<std::string> names;
      for (auto& a : split(trim(lhs.substr(star + 1)), '.')) names.push_back(trim(a));
      try {
        current.slot_terms[slot - 1].push_back(CurveTerm{parse_rational_function(trim(lhs.substr(0, star))),
                                                         quiver.path(slots[target - 1], names), target - 1});
      } catch (const Error& e) {
        line_error(i + 1, e.what());
      }
      any = true;
    }
  }
  if (any || curves.empty()) curves.push_back(std::move(current));
  return curves;
}

std::string format_curve(const UnipotentCurve& curve, const Quiver& quiver) {
  std::string out;
  for (std::size_t r = 0; r < curve.slot_terms.size(); ++r) {
    if (curve.slot_terms[r].empty()) continue;
    out += std::to_string(r + 1) + ":";
    for (std::size_t k = 0; k < curve.slot_terms[r].size(); ++k) {
      const auto& t = curve.slot_terms[r][k];
      out += (k ? "; " : " ") + t.coeff.to_string() + " * " + quiver.format(t.path) + " -> " + std::to_string(t.target_slot + 1);
    }
    out += "\n";
  }
  return out;
}

}  // namespace qg
