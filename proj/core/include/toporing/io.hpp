#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "toporing/endo_topology.hpp"
#include "toporing/matrix_topology.hpp"
#include "toporing/tnilpotency.hpp"
#include "toporing/tower.hpp"

namespace toporing::io {

/// Keys are kept sorted, so equal values serialize to equal bytes.
using Json = nlohmann::json;

/// Malformed text, missing fields or fields of the wrong type.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Well-formed input that fails a mathematical check (axioms, shapes, ranges).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two-space indented, sorted keys, trailing newline.
std::string canonical(const Json& j);
Json parse_text(const std::string& text, const std::string& origin = "<input>");
Json read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& text);

Json to_json(const FiniteField& f);
Json to_json(const Vec& v);
/// Sparse form {"rows", "cols", "entries": [[r, c, value], ...]}.
Json to_json(const Matrix& m);
Json to_json(const Subspace& s);
Json to_json(const StructureAlgebra& a);
Json to_json(const FiniteModule& m);
Json to_json(const RingTower& t);
Json to_json(const ModuleFamily& f);
Json to_json(const OmegaSystem& s);
Json to_json(const WindowedMatrix& m);

FiniteField field_from_json(const Json& j);
Vec vec_from_json(const Json& j, const FiniteField& f, std::size_t n);
Matrix matrix_from_json(const Json& j, const FiniteField& f);

/**
 * Readers. A nested object may be given inline or as a string naming a file relative to `dir`.
 * Every object is validated after parsing; a module may omit its algebra when `context` is given.
 */
StructureAlgebra algebra_from_json(const Json& j, const std::filesystem::path& dir = {});
FiniteModule module_from_json(const Json& j, const std::filesystem::path& dir = {},
                              const StructureAlgebra* context = nullptr);
/// Explicit levels and transitions, or {"builtin": "adic" | "matrix-adic" | "constant" | "product", ...}.
RingTower tower_from_json(const Json& j, const std::filesystem::path& dir = {});
/// Explicit members, or {"builtin": "uniserial", "p", "length"}.
ModuleFamily family_from_json(const Json& j, const std::filesystem::path& dir = {});
OmegaSystem omega_from_json(const Json& j, const std::filesystem::path& dir = {});
/// Base {"algebra": ...} (discrete) or {"tower": ...}.
WindowedMatrix windowed_from_json(const Json& j, const std::filesystem::path& dir = {});

/// Prefix and period of a Bass sequence, or a request for the seeded sampler.
struct BassJob {
  StructureAlgebra ring;
  std::vector<Vec> prefix, period;
  bool sample = false;
};
BassJob bass_from_json(const Json& j, const std::filesystem::path& dir = {});

/// Elements of the top level of a tower to be lifted modulo the topological radical.
struct LiftingJob {
  RingTower tower;
  std::vector<Vec> elements;
  bool from_quotient = false;  // elements form a complete family of the quotient tower
  bool orthogonalize = false;  // elements are idempotents to be made orthogonal
  SideChoice side = SideChoice::Left;
};
LiftingJob lifting_from_json(const Json& j, const std::filesystem::path& dir = {});

/// File loaders: parse, resolve references next to the file, validate.
StructureAlgebra load_algebra(const std::filesystem::path& p);
FiniteModule load_module(const std::filesystem::path& p);
RingTower load_tower(const std::filesystem::path& p);

/// Reads the "format" tag of a document ("" when absent).
std::string format_of(const Json& j);

}  // namespace toporing::io
