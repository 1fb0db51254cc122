#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support.hpp"
#include "toporing/constructions.hpp"
#include "toporing/tnilpotency.hpp"

using namespace toporing;
using toporing::testing::random_module;

namespace {

const FiniteField kF2 = FiniteField::prime(2);

ModuleFamily single(const FiniteModule& m) {
  ModuleFamily fam;
  fam.members = {m};
  fam.labels = {"M"};
  return fam;
}

// Longest chain of cyclic submodules by enumerating every cyclic submodule and running a
// longest-path recursion on the containment order.
std::size_t longest_cyclic_chain_oracle(const FiniteModule& m) {
  std::vector<Subspace> all;
  for (const Vec& v : enumerate_subspace(Subspace::whole(m.field(), m.dim()), 4096)) {
    if (vec_is_zero(v)) continue;
    Subspace s = cyclic_submodule(m, v);
    if (std::none_of(all.begin(), all.end(), [&](const Subspace& t) { return t == s; })) all.push_back(s);
  }
  std::sort(all.begin(), all.end(), [](const Subspace& x, const Subspace& y) { return x.dim() < y.dim(); });
  std::vector<std::size_t> len(all.size(), 1);
  std::size_t best = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (all[j].dim() < all[i].dim() && all[j].is_subset_of(all[i])) len[i] = std::max(len[i], len[j] + 1);
    }
    best = std::max(best, len[i]);
  }
  return best;
}

}  // namespace

TEST(TNilpotency, SimpleModuleBoundOne) {
  const FiniteModule s = regular_module(field_as_algebra(kF2));
  const auto r = local_T_nilpotency_check(single(s), 4);
  ASSERT_EQ(r.kind, TNilKind::Certificate);
  EXPECT_EQ(r.certificate->length_bound, 1u);
  EXPECT_EQ(r.certificate->composition_bound, 1u);
  EXPECT_EQ(r.certificate->samples, 500u);
}

TEST(TNilpotency, LengthTwoUniserialBoundThree) {
  const FiniteModule m = regular_module(truncated_polynomial(kF2, 2));
  const auto r = local_T_nilpotency_check(single(m), 4);
  ASSERT_EQ(r.kind, TNilKind::Certificate);
  EXPECT_EQ(r.certificate->length_bound, 2u);
  EXPECT_EQ(r.certificate->composition_bound, 3u);
}

TEST(TNilpotency, UniserialFamilyMembersAndShifts) {
  const ModuleFamily fam = uniserial_family(kF2, 6);
  ASSERT_EQ(fam.members.size(), 6u);
  ASSERT_EQ(fam.connecting.size(), 5u);
  for (std::size_t n = 0; n < 6; ++n) {
    EXPECT_EQ(fam.members[n].dim(), n + 1);
    EXPECT_FALSE(validate_module(fam.members[n]).has_value());
  }
  for (std::size_t n = 0; n < 5; ++n) {
    const Matrix& s = fam.connecting[n];
    // 1 -> x and a homomorphism
    EXPECT_EQ(s.apply(unit_vec(n + 1, 0)), unit_vec(n + 2, 1));
    for (std::size_t g = 0; g < 6; ++g) EXPECT_EQ(fam.members[n].action(g) * s, s * fam.members[n + 1].action(g));
  }
}

TEST(TNilpotency, TruncatedUniserialFamilyHasWitness) {
  const ModuleFamily fam = uniserial_family(kF2, 6);
  const auto r = local_T_nilpotency_check(fam, 5);
  ASSERT_EQ(r.kind, TNilKind::Witness);
  EXPECT_EQ(r.witness->length(), 5u);
  EXPECT_FALSE(verify_chain(fam, *r.witness).has_value());
  const auto v = perfect_decomposition_verdict(fam, 5);
  EXPECT_EQ(v.verdict, PerfectVerdict::NotPerfect);
}

TEST(TNilpotency, ExactUniserialFamilySatisfiesHaradaSai) {
  ModuleFamily fam = uniserial_family(kF2, 5);
  fam.truncated = false;
  const auto r = local_T_nilpotency_check(fam, 5, 7);
  ASSERT_EQ(r.kind, TNilKind::Certificate);
  EXPECT_EQ(r.certificate->length_bound, 5u);
  EXPECT_EQ(r.certificate->composition_bound, 31u);
}

TEST(TNilpotency, TamperedWitnessIsRejected) {
  const ModuleFamily fam = uniserial_family(kF2, 4);
  auto r = local_T_nilpotency_check(fam, 3);
  ASSERT_EQ(r.kind, TNilKind::Witness);
  NonisoChain bad = *r.witness;
  bad.maps[0] = Matrix::identity(kF2, fam.members[bad.members[0]].dim());
  bad.members[1] = bad.members[0];
  EXPECT_TRUE(verify_chain(fam, bad).has_value());
}

TEST(TNilpotency, NonLocalMemberRejected) {
  const FiniteModule m = regular_module(product({field_as_algebra(kF2), field_as_algebra(kF2)}));
  EXPECT_THROW(local_T_nilpotency_check(single(m), 3), std::invalid_argument);
}

TEST(PerfectVerdict, FiniteModuleIsPerfect) {
  const StructureAlgebra a = truncated_polynomial(kF2, 4);
  const FiniteModule m = direct_sum({regular_module(a), cyclic_quotient(a, Subspace::span(kF2, 4, {unit_vec(4, 1), unit_vec(4, 2), unit_vec(4, 3)}))});
  const auto v = perfect_decomposition_verdict(m, 5);
  EXPECT_EQ(v.verdict, PerfectVerdict::Perfect);
  ASSERT_TRUE(v.decomposition.has_value());
  EXPECT_EQ(v.decomposition->summands.size(), 2u);
  EXPECT_EQ(v.tnil.certificate->length_bound, 4u);
}

TEST(PerfectVerdict, EmptyFamilyIsPerfect) {
  const auto v = perfect_decomposition_verdict(ModuleFamily{}, 3);
  EXPECT_EQ(v.verdict, PerfectVerdict::Perfect);
  EXPECT_EQ(v.tnil.certificate->length_bound, 0u);
}

TEST(Coperfect, UniserialChainOfLengthFour) {
  const FiniteModule m = regular_module(truncated_polynomial(kF2, 4));
  const auto r = coperfect_witness_search(m, 8);
  EXPECT_EQ(r.kind, CoperfectKind::Terminates);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.longest.length(), 4u);
  const auto capped = coperfect_witness_search(m, 3);
  EXPECT_EQ(capped.kind, CoperfectKind::Chain);
  EXPECT_EQ(capped.longest.length(), 3u);
}

TEST(Coperfect, VectorSpaceOverFieldHasLengthOne) {
  const FiniteModule s = regular_module(field_as_algebra(kF2));
  const auto r = coperfect_witness_search(direct_sum({s, s}), 5);
  EXPECT_EQ(r.kind, CoperfectKind::Terminates);
  EXPECT_EQ(r.longest.length(), 1u);
}

TEST(Coperfect, RandomModulesMatchOracle) {
  Rng rng(2024);
  for (int t = 0; t < 20; ++t) {
    const StructureAlgebra a = random_algebra(kF2, rng.next(), 5);
    const FiniteModule m = random_module(a, rng, 7);
    const auto r = coperfect_witness_search(m, 64);
    ASSERT_TRUE(r.exhaustive);
    EXPECT_EQ(r.longest.length(), longest_cyclic_chain_oracle(m)) << "trial " << t;
    EXPECT_LE(r.longest.length(), m.dim());
    EXPECT_FALSE(verify_cyclic_chain(m, r.longest).has_value());
  }
}
