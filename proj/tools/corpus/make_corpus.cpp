// Writes the bundled data corpus in canonical form.
#include <filesystem>
#include <iostream>

#include "toporing/constructions.hpp"
#include "toporing/io.hpp"

using namespace toporing;
using toporing::io::Json;

namespace fs = std::filesystem;

namespace {

fs::path root;

void put(const std::string& rel, const Json& j) {
  const fs::path p = root / rel;
  fs::create_directories(p.parent_path());
  io::write_file(p, io::canonical(j));
  std::cout << rel << "\n";
}

Json with_ref(Json module, const std::string& algebra_file) {
  module["algebra"] = algebra_file;
  return module;
}

Subspace span_of(const StructureAlgebra& r, const std::vector<std::size_t>& idx) {
  std::vector<Vec> vs;
  for (std::size_t i : idx) vs.push_back(r.basis(i));
  return Subspace::span(r.field(), r.dim(), vs);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus DATA_DIR\n";
    return 2;
  }
  root = argv[1];
  const FiniteField f2 = FiniteField::prime(2), f3 = FiniteField::prime(3), f4 = FiniteField::of_order(2, 2);

  // Ten finite rings.
  const std::vector<std::pair<std::string, StructureAlgebra>> rings = {
      {"f2", field_as_algebra(f2).with_label("F2")},
      {"f3", field_as_algebra(f3).with_label("F3")},
      {"f4", field_as_algebra(f4).with_label("F4 over F2")},
      {"f2_x2", truncated_polynomial(f2, 2).with_label("F2[x]/(x^2)")},
      {"f3_x3", truncated_polynomial(f3, 3).with_label("F3[x]/(x^3)")},
      {"mat2_f2", matrix_algebra(f2, 2).with_label("Mat2(F2)")},
      {"t2_f2", upper_triangular(f2, 2).with_label("T2(F2)")},
      {"t3_f2", upper_triangular(f2, 3).with_label("T3(F2)")},
      {"f2_c3", cyclic_group_algebra(f2, 3).with_label("F2[C3]")},
      {"f2_c2", cyclic_group_algebra(f2, 2).with_label("F2[C2]")},
  };
  for (const auto& [name, a] : rings) put("algebras/" + name + ".json", io::to_json(a));

  // Towers.
  put("towers/adic_f2_d5.json", io::to_json(adic_tower(f2, 5)));
  put("towers/adic_f3_d4.json", io::to_json(adic_tower(f3, 4)));
  put("towers/matrix_adic_f2_k2_d3.json", io::to_json(matrix_adic_tower(f2, 2, 3)));
  put("towers/constant_t2_f2_d3.json", io::to_json(constant_tower(upper_triangular(f2, 2), 3)));
  put("towers/product_f2_mat2_f4.json",
      io::to_json(product_tower({field_as_algebra(f2), matrix_algebra(f2, 2), field_as_algebra(f4)}, 1)));
  put("towers/adic_f3_builtin.json", Json{{"format", "toporing.tower"}, {"builtin", "adic"}, {"field", Json{{"p", 3}}}, {"depth", 3}});

  // Modules over bundled algebras.
  const StructureAlgebra dual = truncated_polynomial(f2, 2);
  put("modules/f2_x2_regular_plus_simple.json",
      with_ref(io::to_json(direct_sum({regular_module(dual), cyclic_quotient(dual, span_of(dual, {1}))})), "../algebras/f2_x2.json"));
  const StructureAlgebra mat = matrix_algebra(f2, 2);
  const FiniteModule simple = cyclic_quotient(mat, span_of(mat, {2, 3}));
  put("modules/mat2_f2_simple.json", with_ref(io::to_json(simple), "../algebras/mat2_f2.json"));
  put("modules/mat2_f2_simple_squared.json", with_ref(io::to_json(direct_sum({simple, simple})), "../algebras/mat2_f2.json"));
  const StructureAlgebra t2 = upper_triangular(f2, 2);
  put("modules/t2_f2_regular.json", with_ref(io::to_json(regular_module(t2)), "../algebras/t2_f2.json"));

  // Families and direct systems.
  put("families/uniserial_f2_6.json", io::to_json(uniserial_family(f2, 6)));
  put("families/uniserial_f2_6_builtin.json",
      Json{{"format", "toporing.family"}, {"builtin", "uniserial"}, {"field", Json{{"p", 2}}}, {"length", 6}});
  put("systems/uniserial_f2_6.json", io::to_json(uniserial_system(f2, 6)));
  {
    OmegaSystem s;
    s.members.assign(4, regular_module(dual));
    s.connecting.assign(3, Matrix::identity(f2, 2));
    s.stable_from = 0;
    put("systems/constant_f2_x2.json", io::to_json(s));
  }
  {
    const StructureAlgebra c3 = cyclic_group_algebra(f2, 3);
    const Vec e = c3.add(c3.add(c3.basis(0), c3.basis(1)), c3.basis(2));
    const FiniteModule reg = regular_module(c3);
    const QuotientModule q = quotient_module(reg, preimage(c3.left_mult(e), Subspace(f2, 3)));
    OmegaSystem s;
    s.members = {reg, q.module, q.module};
    s.connecting = {q.projection, Matrix::identity(f2, q.module.dim())};
    s.stable_from = 1;
    put("systems/f2_c3_idempotent.json", io::to_json(s));
  }

  // Windowed matrices over a countable index set.
  const MatrixBase adic2 = tower_base(adic_tower(f2, 2));
  put("windowed/shift_f2_adic2.json", io::to_json(shift_matrix(adic2, 7)));
  put("windowed/shift_transpose_f2_adic2.json", io::to_json(shift_matrix(adic2, 7, true)));
  {
    Rng rng(11);
    put("windowed/random_f2_adic2.json", io::to_json(random_windowed(adic2, IndexSet::countable(), 5, rng)));
    put("windowed/random_f2_adic2_b.json", io::to_json(random_windowed(adic2, IndexSet::countable(), 5, rng)));
  }

  // Bass sequences.
  put("bass/f2_x2_by_x.json",
      Json{{"format", "toporing.bass"}, {"algebra", "../algebras/f2_x2.json"}, {"prefix", Json::array()}, {"period", Json::array({Vec{0, 1}})}});
  put("bass/f2_c3_unit.json", Json{{"format", "toporing.bass"}, {"algebra", "../algebras/f2_c3.json"},
                                    {"prefix", Json::array({Vec{0, 0, 1}})}, {"period", Json::array({Vec{0, 1, 0}})}});
  put("bass/t3_f2_sampled.json", Json{{"format", "toporing.bass"}, {"algebra", "../algebras/t3_f2.json"}, {"sample", true}});

  // Lifting jobs.
  put("lifting/adic_f3_one_plus_x.json",
      Json{{"format", "toporing.lifting"}, {"tower", "../towers/adic_f3_d4.json"}, {"elements", Json::array({Vec{1, 1, 0, 0}})}});
  {
    const StructureAlgebra k = truncated_polynomial(f2, 3);
    const RingTower t = matrix_adic_tower(f2, 2, 3);
    const Vec one = k.one(), zero = k.zero();
    Vec e11 = matrix_ring_element(k, 2, {one, zero, zero, zero});
    Vec e22 = matrix_ring_element(k, 2, {zero, zero, zero, one});
    // perturb by elements of the radical x Mat_2
    Vec x = zero;
    x[1] = 1;
    e11 = vec_add(f2, e11, matrix_ring_element(k, 2, {zero, x, zero, zero}));
    e22 = vec_add(f2, e22, matrix_ring_element(k, 2, {x, zero, x, zero}));
    put("lifting/matrix_adic_f2_family.json",
        Json{{"format", "toporing.lifting"}, {"tower", "../towers/matrix_adic_f2_k2_d3.json"}, {"elements", Json::array({e11, e22})}});
  }
  return 0;
}
