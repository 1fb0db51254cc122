#include <gtest/gtest.h>

#include "support.hpp"
#include "toporing/constructions.hpp"
#include "toporing/io.hpp"
#include "toporing/report.hpp"

using namespace toporing;
using namespace toporing::io;
using toporing::testing::random_module;

namespace {

const FiniteField kF2 = FiniteField::prime(2);

std::string round_trip_algebra(const StructureAlgebra& a) {
  const std::string text = canonical(to_json(a));
  return canonical(to_json(algebra_from_json(parse_text(text))));
}

}  // namespace

TEST(Io, AlgebraRoundTripIsBitExact) {
  std::vector<StructureAlgebra> algebras = {truncated_polynomial(kF2, 3), matrix_algebra(FiniteField::of_order(2, 2), 2),
                                            upper_triangular(FiniteField::prime(3), 2),
                                            cyclic_group_algebra(kF2, 3).with_label("F2[C3]")};
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    algebras.push_back(random_algebra(seed % 2 == 0 ? kF2 : FiniteField::prime(3), seed));
  }
  for (const StructureAlgebra& a : algebras) {
    const std::string text = canonical(to_json(a));
    EXPECT_EQ(round_trip_algebra(a), text);
    const StructureAlgebra b = algebra_from_json(parse_text(text));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.label(), b.label());
  }
}

TEST(Io, ModuleTowerFamilyRoundTrip) {
  Rng rng(7);
  const StructureAlgebra a = upper_triangular(kF2, 2);
  for (int i = 0; i < 10; ++i) {
    const FiniteModule m = random_module(a, rng, 4);
    const std::string text = canonical(to_json(m));
    EXPECT_EQ(canonical(to_json(module_from_json(parse_text(text)))), text);
  }
  for (const RingTower& t : {adic_tower(kF2, 4), matrix_adic_tower(kF2, 2, 2)}) {
    const std::string text = canonical(to_json(t));
    EXPECT_EQ(canonical(to_json(tower_from_json(parse_text(text)))), text);
  }
  const ModuleFamily fam = uniserial_family(kF2, 4);
  const std::string ftext = canonical(to_json(fam));
  EXPECT_EQ(canonical(to_json(family_from_json(parse_text(ftext)))), ftext);
  const OmegaSystem sys = uniserial_system(kF2, 4);
  const std::string stext = canonical(to_json(sys));
  EXPECT_EQ(canonical(to_json(omega_from_json(parse_text(stext)))), stext);
}

TEST(Io, WindowedRoundTrip) {
  Rng rng(3);
  const MatrixBase b = tower_base(adic_tower(kF2, 2));
  for (int i = 0; i < 5; ++i) {
    const WindowedMatrix m = random_windowed(b, IndexSet::countable(), 4, rng);
    const std::string text = canonical(to_json(m));
    EXPECT_EQ(canonical(to_json(windowed_from_json(parse_text(text)))), text);
  }
}

TEST(Io, BuiltinTowerMatchesExplicit) {
  const Json j = parse_text(R"({"format": "toporing.tower", "builtin": "adic", "field": {"p": 3}, "depth": 3})");
  EXPECT_EQ(canonical(to_json(tower_from_json(j))), canonical(to_json(adic_tower(FiniteField::prime(3), 3))));
}

TEST(Io, ParseErrorsAndValidationErrorsAreDistinct) {
  EXPECT_THROW(parse_text("{\"dim\": "), ParseError);
  EXPECT_THROW(algebra_from_json(parse_text(R"({"field": {"p": 2}, "constants": [], "unit": [1]})")), ParseError);
  EXPECT_THROW(algebra_from_json(parse_text(R"({"field": {"p": 2}, "dim": "one", "constants": [], "unit": [1]})")), ParseError);
  // unit fails: e0 e0 = 0
  EXPECT_THROW(algebra_from_json(parse_text(R"({"field": {"p": 2}, "dim": 1, "constants": [], "unit": [1]})")), ValidationError);
  EXPECT_THROW(algebra_from_json(parse_text(R"({"field": {"p": 4}, "dim": 1, "constants": [[0,0,0,1]], "unit": [1]})")),
               ValidationError);
  EXPECT_THROW(algebra_from_json(parse_text(R"({"field": {"p": 2}, "dim": 1, "constants": [[0,0,0,3]], "unit": [1]})")),
               ValidationError);
  EXPECT_THROW(algebra_from_json(parse_text(R"({"field": {"p": 2}, "dim": 1, "constants": [[0,0,1,1]], "unit": [1]})")),
               ValidationError);
  Json t = to_json(adic_tower(kF2, 2));
  t["transitions"][0]["entries"] = Json::array();
  EXPECT_THROW(tower_from_json(t), ValidationError);
}

TEST(Io, ReportsAreDeterministic) {
  const auto a = cyclic_group_algebra(kF2, 3);
  EXPECT_EQ(canonical(to_json(wedderburn(a, 5))), canonical(to_json(wedderburn(a, 5))));
  const Json w = to_json(wedderburn(a, 5));
  EXPECT_TRUE(w["verified"].get<bool>());
  EXPECT_EQ(w["factors"].size(), 2u);
}
