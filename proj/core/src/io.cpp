#include "toporing/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "toporing/constructions.hpp"

namespace toporing::io {

namespace fs = std::filesystem;

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::uint64_t as_uint(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

std::uint64_t need_uint(const Json& j, const char* key) { return as_uint(need(j, key), key); }

bool opt_bool(const Json& j, const char* key, bool fallback) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  if (!it->is_boolean()) throw ParseError(std::string(key) + " must be a boolean");
  return it->get<bool>();
}

std::string opt_string(const Json& j, const char* key, const std::string& fallback) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_string()) throw ParseError(std::string(key) + " must be a string");
  return it->get<std::string>();
}

const Json& need_array(const Json& j, const char* key) {
  const Json& a = need(j, key);
  if (!a.is_array()) throw ParseError(std::string(key) + " must be an array");
  return a;
}

void expect_format(const Json& j, const char* fmt) {
  const std::string got = format_of(j);
  if (!got.empty() && got != fmt) throw ParseError("expected format '" + std::string(fmt) + "', found '" + got + "'");
}

// Inline object, or a file name relative to dir; returns the object and the directory it lives in.
std::pair<Json, fs::path> resolve(const Json& j, const fs::path& dir) {
  if (j.is_string()) {
    const fs::path p = dir / j.get<std::string>();
    return {read_file(p), p.parent_path()};
  }
  if (!j.is_object()) throw ParseError("expected an object or a file name");
  return {j, dir};
}

Elem elem_in(const FiniteField& f, const Json& j) {
  const std::uint64_t v = as_uint(j, "field element");
  if (v >= f.order()) throw ValidationError("field element " + std::to_string(v) + " is not below q = " + std::to_string(f.order()));
  return static_cast<Elem>(v);
}

std::size_t index_in(const Json& j, std::size_t bound, const char* what) {
  const std::uint64_t v = as_uint(j, what);
  if (v >= bound) throw ValidationError(std::string(what) + " " + std::to_string(v) + " out of range (< " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(v);
}

template <typename F>
auto validated(F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const ValidationError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
}

std::vector<Vec> vecs_from_json(const Json& j, const FiniteField& f, std::size_t n) {
  if (!j.is_array()) throw ParseError("expected an array of vectors");
  std::vector<Vec> out;
  for (const Json& v : j) out.push_back(vec_from_json(v, f, n));
  return out;
}

Json module_body(const FiniteModule& m) {
  Json action = Json::array();
  for (const Matrix& a : m.action()) action.push_back(to_json(a)["entries"]);
  return Json{{"side", m.side() == Side::Right ? "right" : "left"}, {"dim", m.dim()}, {"action", action}};
}

}  // namespace

std::string canonical(const Json& j) { return j.dump(2) + "\n"; }

Json parse_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

Json read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), p.string());
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

std::string format_of(const Json& j) {
  if (!j.is_object()) return "";
  const auto it = j.find("format");
  return it != j.end() && it->is_string() ? it->get<std::string>() : "";
}

Json to_json(const FiniteField& f) { return Json{{"p", f.characteristic()}, {"modulus", f.modulus()}}; }

Json to_json(const Vec& v) { return Json(v); }

Json to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0) entries.push_back(Json::array({r, c, m(r, c)}));
    }
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const Vec& v : s.basis_vecs()) basis.push_back(v);
  return Json{{"ambient", s.ambient()}, {"dim", s.dim()}, {"basis", basis}};
}

Json to_json(const StructureAlgebra& a) {
  Json constants = Json::array();
  for (const ConstantTriple& t : sparse_constants(a)) constants.push_back(Json::array({t.i, t.j, t.k, t.value}));
  Json j{{"format", "toporing.algebra"}, {"field", to_json(a.field())}, {"dim", a.dim()}, {"constants", constants},
         {"unit", a.one()}};
  if (!a.label().empty()) j["label"] = a.label();
  return j;
}

Json to_json(const FiniteModule& m) {
  Json j = module_body(m);
  j["format"] = "toporing.module";
  j["algebra"] = to_json(m.algebra());
  return j;
}

Json to_json(const RingTower& t) {
  Json levels = Json::array(), transitions = Json::array();
  for (const StructureAlgebra& a : t.levels) levels.push_back(to_json(a));
  for (const Matrix& m : t.transitions) transitions.push_back(to_json(m));
  return Json{{"format", "toporing.tower"}, {"name", t.name},
              {"intent", t.intent == TowerIntent::Exact ? "exact" : "truncation"}, {"levels", levels},
              {"transitions", transitions}};
}

Json to_json(const ModuleFamily& f) {
  Json members = Json::array(), connecting = Json::array();
  for (const FiniteModule& m : f.members) members.push_back(module_body(m));
  for (const Matrix& m : f.connecting) connecting.push_back(to_json(m));
  Json j{{"format", "toporing.family"}, {"truncated", f.truncated}, {"labels", f.labels}, {"members", members},
         {"connecting", connecting}};
  if (!f.members.empty()) j["algebra"] = to_json(f.members.front().algebra());
  return j;
}

Json to_json(const OmegaSystem& s) {
  Json members = Json::array(), connecting = Json::array();
  for (const FiniteModule& m : s.members) members.push_back(module_body(m));
  for (const Matrix& m : s.connecting) connecting.push_back(to_json(m));
  Json j{{"format", "toporing.omega"}, {"members", members}, {"connecting", connecting},
         {"polynomial_ground", s.polynomial_ground}, {"x_index", s.x_index}};
  j["stable_from"] = s.stable_from ? Json(*s.stable_from) : Json(nullptr);
  if (!s.members.empty()) j["algebra"] = to_json(s.members.front().algebra());
  return j;
}

Json to_json(const WindowedMatrix& m) {
  Json rows = Json::array();
  for (std::size_t x = 0; x < m.window; ++x) {
    Json entries = Json::array(), bounds = Json::array();
    for (std::size_t y = 0; y < m.window; ++y) {
      if (!vec_is_zero(m.at(x, y))) entries.push_back(Json::array({y, m.at(x, y)}));
    }
    for (std::size_t b : m.bounds[x]) bounds.push_back(b == kUncertified ? Json(nullptr) : Json(b));
    rows.push_back(Json{{"entries", entries}, {"bounds", bounds}, {"known", static_cast<bool>(m.known[x])}});
  }
  Json base = m.base->depth() == 1 ? Json{{"algebra", to_json(m.ring())}} : Json{{"tower", to_json(*m.base)}};
  Json index = m.index.omega ? Json{{"omega", true}} : Json{{"size", m.index.size}};
  return Json{{"format", "toporing.windowed"}, {"base", base}, {"index", index}, {"window", m.window}, {"rows", rows}};
}

FiniteField field_from_json(const Json& j) {
  return validated([&] {
    const auto p = static_cast<std::uint32_t>(need_uint(j, "p"));
    if (j.contains("modulus")) {
      std::vector<std::uint32_t> mod;
      for (const Json& c : need_array(j, "modulus")) mod.push_back(static_cast<std::uint32_t>(as_uint(c, "modulus coefficient")));
      if (mod.size() == 2 && mod[0] == 0 && mod[1] == 1) return FiniteField::prime(p);
      return FiniteField::extension(p, mod);
    }
    if (j.contains("d")) return FiniteField::of_order(p, static_cast<std::uint32_t>(need_uint(j, "d")));
    return FiniteField::prime(p);
  });
}

Vec vec_from_json(const Json& j, const FiniteField& f, std::size_t n) {
  if (!j.is_array()) throw ParseError("expected a coordinate vector");
  if (j.size() != n) throw ValidationError("vector of length " + std::to_string(j.size()) + ", expected " + std::to_string(n));
  Vec v;
  for (const Json& e : j) v.push_back(elem_in(f, e));
  return v;
}

Matrix matrix_from_json(const Json& j, const FiniteField& f) {
  const std::size_t rows = need_uint(j, "rows"), cols = need_uint(j, "cols");
  Matrix m(f, rows, cols);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Json& e : need_array(j, "entries")) {
    if (!e.is_array() || e.size() != 3) throw ParseError("matrix entries are [row, col, value] triples");
    const std::size_t r = index_in(e[0], rows, "row"), c = index_in(e[1], cols, "column");
    if (!seen.insert({r, c}).second) throw ValidationError("repeated matrix entry");
    m(r, c) = elem_in(f, e[2]);
  }
  return m;
}

StructureAlgebra algebra_from_json(const Json& j0, const fs::path& dir) {
  const auto [j, here] = resolve(j0, dir);
  (void)here;
  expect_format(j, "toporing.algebra");
  const FiniteField f = field_from_json(need(j, "field"));
  const std::size_t n = need_uint(j, "dim");
  if (n == 0) throw ValidationError("algebra dimension must be >= 1");
  std::vector<ConstantTriple> triples;
  for (const Json& t : need_array(j, "constants")) {
    if (!t.is_array() || t.size() != 4) throw ParseError("structure constants are [i, j, k, value] quadruples");
    triples.push_back({index_in(t[0], n, "i"), index_in(t[1], n, "j"), index_in(t[2], n, "k"), elem_in(f, t[3])});
  }
  std::set<std::array<std::size_t, 3>> seen;
  for (const ConstantTriple& t : triples) {
    if (!seen.insert({t.i, t.j, t.k}).second) throw ValidationError("repeated structure constant");
  }
  const Vec unit = vec_from_json(need(j, "unit"), f, n);
  AlgebraValidation v = validate_algebra(f, n, triples, unit);
  if (!v.ok()) {
    std::string msg = "algebra fails its axioms";
    for (const AlgebraDiagnostic& d : v.diagnostics) msg += "; " + d.message;
    throw ValidationError(msg);
  }
  StructureAlgebra a = *v.algebra;
  const std::string label = opt_string(j, "label", "");
  return label.empty() ? a : a.with_label(label);
}

FiniteModule module_from_json(const Json& j0, const fs::path& dir, const StructureAlgebra* context) {
  const auto [j, here] = resolve(j0, dir);
  expect_format(j, "toporing.module");
  const StructureAlgebra a = j.contains("algebra") ? algebra_from_json(j["algebra"], here)
                                                   : context != nullptr ? *context
                                                                        : throw ParseError("module without an algebra");
  const std::string side = opt_string(j, "side", "right");
  if (side != "right" && side != "left") throw ParseError("side must be 'right' or 'left'");
  const std::size_t dim = need_uint(j, "dim");
  const Json& action = need_array(j, "action");
  if (action.size() != a.dim()) throw ValidationError("module needs one action matrix per algebra basis element");
  std::vector<Matrix> mats;
  for (const Json& entries : action) mats.push_back(matrix_from_json(Json{{"rows", dim}, {"cols", dim}, {"entries", entries}}, a.field()));
  FiniteModule m(a, side == "right" ? Side::Right : Side::Left, dim, std::move(mats));
  if (auto err = validate_module(m)) throw ValidationError("module fails its axioms: " + *err);
  return m;
}

RingTower tower_from_json(const Json& j0, const fs::path& dir) {
  const auto [j, here] = resolve(j0, dir);
  expect_format(j, "toporing.tower");
  return validated([&, &j = j, &here = here]() -> RingTower {
    try {
      if (j.contains("builtin")) {
        const std::string kind = need(j, "builtin").get<std::string>();
        const std::size_t depth = need_uint(j, "depth");
        if (depth == 0) throw ValidationError("tower depth must be >= 1");
        if (kind == "adic") return adic_tower(field_from_json(need(j, "field")), depth);
        if (kind == "matrix-adic") {
          return matrix_adic_tower(field_from_json(need(j, "field")), need_uint(j, "size"), depth);
        }
        if (kind == "constant") return constant_tower(algebra_from_json(need(j, "algebra"), here), depth);
        if (kind == "product") {
          std::vector<StructureAlgebra> factors;
          for (const Json& f : need_array(j, "factors")) factors.push_back(algebra_from_json(f, here));
          const std::size_t initial = need_uint(j, "initial");
          if (initial == 0 || initial + depth - 1 > factors.size()) throw ValidationError("product tower needs initial + depth - 1 factors");
          factors.resize(initial + depth - 1);
          return product_tower(factors, initial);
        }
        throw ParseError("unknown builtin tower '" + kind + "'");
      }
      std::vector<StructureAlgebra> levels;
      for (const Json& l : need_array(j, "levels")) levels.push_back(algebra_from_json(l, here));
      if (levels.empty()) throw ValidationError("tower without levels");
      std::vector<Matrix> transitions;
      for (const Json& m : need_array(j, "transitions")) transitions.push_back(matrix_from_json(m, levels.front().field()));
      const std::string intent = opt_string(j, "intent", "truncation");
      if (intent != "truncation" && intent != "exact") throw ParseError("intent must be 'truncation' or 'exact'");
      return build_tower(opt_string(j, "name", "tower"), std::move(levels), std::move(transitions),
                         intent == "exact" ? TowerIntent::Exact : TowerIntent::Truncation);
    } catch (const TowerError& e) {
      std::string msg = e.what();
      for (const TowerDiagnostic& d : e.diagnostics) msg += "; level " + std::to_string(d.level) + ": " + d.message;
      throw ValidationError(msg);
    } catch (const Json::type_error& e) {
      throw ParseError(e.what());
    }
  });
}

ModuleFamily family_from_json(const Json& j0, const fs::path& dir) {
  const auto [j, here] = resolve(j0, dir);
  expect_format(j, "toporing.family");
  return validated([&, &j = j, &here = here]() -> ModuleFamily {
    if (j.contains("builtin")) {
      if (!need(j, "builtin").is_string() || j["builtin"].get<std::string>() != "uniserial") throw ParseError("unknown builtin family");
      const std::size_t len = need_uint(j, "length");
      if (len == 0) throw ValidationError("family length must be >= 1");
      ModuleFamily fam = uniserial_family(field_from_json(need(j, "field")), len);
      fam.truncated = opt_bool(j, "truncated", true);
      return fam;
    }
    ModuleFamily fam;
    std::optional<StructureAlgebra> a;
    if (j.contains("algebra")) a = algebra_from_json(j["algebra"], here);
    for (const Json& m : need_array(j, "members")) fam.members.push_back(module_from_json(m, here, a ? &*a : nullptr));
    if (j.contains("labels")) {
      for (const Json& l : need_array(j, "labels")) {
        if (!l.is_string()) throw ParseError("labels must be strings");
        fam.labels.push_back(l.get<std::string>());
      }
    }
    if (fam.labels.empty()) {
      for (std::size_t i = 0; i < fam.members.size(); ++i) fam.labels.push_back("M" + std::to_string(i + 1));
    }
    if (fam.labels.size() != fam.members.size()) throw ValidationError("one label per member");
    fam.truncated = opt_bool(j, "truncated", false);
    if (j.contains("connecting") && !fam.members.empty()) {
      for (const Json& m : need_array(j, "connecting")) fam.connecting.push_back(matrix_from_json(m, fam.members.front().field()));
    }
    for (std::size_t i = 1; i < fam.members.size(); ++i) {
      if (!(fam.members[i].algebra() == fam.members[0].algebra())) throw ValidationError("family members over different algebras");
    }
    return fam;
  });
}

OmegaSystem omega_from_json(const Json& j0, const fs::path& dir) {
  const auto [j, here] = resolve(j0, dir);
  expect_format(j, "toporing.omega");
  return validated([&, &j = j, &here = here]() -> OmegaSystem {
    if (j.contains("builtin")) {
      if (!need(j, "builtin").is_string() || j["builtin"].get<std::string>() != "uniserial") throw ParseError("unknown builtin system");
      const std::size_t len = need_uint(j, "length");
      if (len == 0) throw ValidationError("system length must be >= 1");
      return uniserial_system(field_from_json(need(j, "field")), len);
    }
    OmegaSystem s;
    std::optional<StructureAlgebra> a;
    if (j.contains("algebra")) a = algebra_from_json(j["algebra"], here);
    for (const Json& m : need_array(j, "members")) s.members.push_back(module_from_json(m, here, a ? &*a : nullptr));
    if (s.members.empty()) throw ValidationError("system without members");
    for (const Json& m : need_array(j, "connecting")) s.connecting.push_back(matrix_from_json(m, s.members.front().field()));
    if (s.connecting.size() + 1 != s.members.size()) throw ValidationError("one connecting map between consecutive members");
    for (std::size_t n = 0; n < s.connecting.size(); ++n) {
      if (s.connecting[n].rows() != s.members[n].dim() || s.connecting[n].cols() != s.members[n + 1].dim()) {
        throw ValidationError("connecting map " + std::to_string(n) + " has the wrong shape");
      }
    }
    if (j.contains("stable_from") && !j["stable_from"].is_null()) s.stable_from = as_uint(j["stable_from"], "stable_from");
    s.polynomial_ground = opt_bool(j, "polynomial_ground", false);
    if (j.contains("x_index")) s.x_index = index_in(j["x_index"], s.members.front().algebra().dim(), "x_index");
    return s;
  });
}

WindowedMatrix windowed_from_json(const Json& j0, const fs::path& dir) {
  const auto [j, here] = resolve(j0, dir);
  expect_format(j, "toporing.windowed");
  const Json& base = need(j, "base");
  const MatrixBase b = base.contains("tower") ? tower_base(tower_from_json(base["tower"], here))
                                              : discrete_base(algebra_from_json(need(base, "algebra"), here));
  const Json& idx = need(j, "index");
  const IndexSet y = opt_bool(idx, "omega", false) ? IndexSet::countable() : IndexSet::finite(need_uint(idx, "size"));
  const std::size_t w = need_uint(j, "window");
  WindowedMatrix m = windowed_zero(b, y, w);
  const Json& rows = need_array(j, "rows");
  if (rows.size() != w) throw ValidationError("one row description per window row");
  for (std::size_t x = 0; x < w; ++x) {
    const Json& row = rows[x];
    for (const Json& e : need_array(row, "entries")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("row entries are [column, element] pairs");
      m.at(x, index_in(e[0], w, "column")) = vec_from_json(e[1], b->field(), m.ring().dim());
    }
    const Json& bounds = need_array(row, "bounds");
    if (bounds.size() != b->depth()) throw ValidationError("one bound per base level");
    for (std::size_t n = 0; n < bounds.size(); ++n) m.bounds[x][n] = bounds[n].is_null() ? kUncertified : as_uint(bounds[n], "bound");
    m.known[x] = opt_bool(row, "known", true);
  }
  if (auto err = validate_windowed(m)) throw ValidationError("windowed matrix: " + *err);
  return m;
}

BassJob bass_from_json(const Json& j0, const fs::path& dir) {
  const auto [j, here] = resolve(j0, dir);
  expect_format(j, "toporing.bass");
  BassJob job;
  job.ring = algebra_from_json(need(j, "algebra"), here);
  job.sample = opt_bool(j, "sample", false);
  if (j.contains("prefix")) job.prefix = vecs_from_json(j["prefix"], job.ring.field(), job.ring.dim());
  if (j.contains("period")) job.period = vecs_from_json(j["period"], job.ring.field(), job.ring.dim());
  if (!job.sample && job.period.empty()) throw ValidationError("a Bass sequence needs a nonempty period or \"sample\": true");
  return job;
}

LiftingJob lifting_from_json(const Json& j0, const fs::path& dir) {
  const auto [j, here] = resolve(j0, dir);
  expect_format(j, "toporing.lifting");
  LiftingJob job;
  job.tower = tower_from_json(need(j, "tower"), here);
  job.elements = vecs_from_json(need(j, "elements"), job.tower.field(), job.tower.levels.back().dim());
  if (job.elements.empty()) throw ValidationError("nothing to lift");
  job.from_quotient = opt_bool(j, "from_quotient", false);
  job.orthogonalize = opt_bool(j, "orthogonalize", false);
  const std::string side = opt_string(j, "side", "left");
  if (side != "left" && side != "right") throw ParseError("side must be 'left' or 'right'");
  job.side = side == "left" ? SideChoice::Left : SideChoice::Right;
  return job;
}

StructureAlgebra load_algebra(const fs::path& p) { return algebra_from_json(read_file(p), p.parent_path()); }
FiniteModule load_module(const fs::path& p) { return module_from_json(read_file(p), p.parent_path()); }
RingTower load_tower(const fs::path& p) { return tower_from_json(read_file(p), p.parent_path()); }

}  // namespace toporing::io
