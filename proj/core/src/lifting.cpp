#include "toporing/lifting.hpp"

#include <stdexcept>

#include "toporing/wedderburn.hpp"

namespace toporing {

namespace {

std::size_t ceil_log2(std::size_t k) {
  std::size_t r = 0;
  while ((std::size_t{1} << r) < k) ++r;
  return r;
}

bool is_idempotent(const StructureAlgebra& a, const Vec& e) { return a.mul(e, e) == e; }

}  // namespace

IdempotentLift lift_idempotent(const StructureAlgebra& a, const Vec& f, const Subspace& h) {
  if (!h.contains(a.sub(a.mul(f, f), f))) throw std::invalid_argument("f^2 - f is not in H");
  const auto nil = nilpotency_index(a, h);
  if (!nil) throw std::invalid_argument("H is not nilpotent");
  IdempotentLift out;
  out.nil_index = *nil;
  out.iteration_bound = ceil_log2(*nil) + 1;
  const FiniteField& k = a.field();
  const Elem three = k.from_int(3), two = k.from_int(2);
  Vec g = f;
  while (!is_idempotent(a, g)) {
    if (out.iterations >= out.iteration_bound) throw std::logic_error("Newton iteration exceeded its depth bound");
    const Vec g2 = a.mul(g, g);
    const Vec g3 = a.mul(g2, g);
    g = a.sub(a.scale(three, g2), a.scale(two, g3));
    ++out.iterations;
  }
  if (!h.contains(a.sub(g, f))) throw std::logic_error("lifted idempotent left the coset f + H");
  if (!sandwich(a, f, f).contains(g)) throw std::logic_error("lifted idempotent is not in f A f");
  out.e = std::move(g);
  return out;
}

IdempotentFamily record_family(const StructureAlgebra& a, std::vector<Vec> elements) {
  IdempotentFamily fam;
  fam.elements = std::move(elements);
  Vec sum = a.zero();
  for (const Vec& w : fam.elements) {
    std::vector<Vec> row;
    for (const Vec& z : fam.elements) row.push_back(a.mul(w, z));
    fam.products.push_back(std::move(row));
    sum = a.add(sum, w);
  }
  fam.residual = a.sub(a.one(), sum);
  return fam;
}

std::optional<std::string> check_complete_orthogonal(const StructureAlgebra& a, const IdempotentFamily& fam) {
  const IdempotentFamily again = record_family(a, fam.elements);
  if (again.products != fam.products) return "recorded products differ from recomputation";
  if (again.residual != fam.residual) return "recorded residual differs from recomputation";
  const std::size_t m = fam.elements.size();
  for (std::size_t w = 0; w < m; ++w) {
    for (std::size_t z = 0; z < m; ++z) {
      const Vec expect = w == z ? fam.elements[w] : a.zero();
      if (fam.products[w][z] != expect) {
        return w == z ? "element " + std::to_string(w) + " is not idempotent"
                      : "elements " + std::to_string(w) + ", " + std::to_string(z) + " are not orthogonal";
      }
    }
  }
  if (!vec_is_zero(fam.residual)) return "family does not sum to 1";
  return std::nullopt;
}

IdempotentFamily orthogonalize(const StructureAlgebra& a, const std::vector<Vec>& family, const Subspace& h,
                               SideChoice side) {
  Vec u = a.zero();
  for (std::size_t w = 0; w < family.size(); ++w) {
    if (!is_idempotent(a, family[w])) throw std::invalid_argument("family member " + std::to_string(w) + " is not idempotent");
    for (std::size_t z = 0; z < w; ++z) {
      if (!h.contains(a.mul(family[w], family[z]))) {
        throw std::invalid_argument("half-orthogonality fails for the pair (" + std::to_string(w) + ", " +
                                    std::to_string(z) + ")");
      }
    }
    u = a.add(u, family[w]);
  }
  Vec uinv;
  if (h.contains(a.sub(u, a.one())) && nilpotency_index(a, h)) {
    uinv = invert_in_one_plus_h(a, u, h);
  } else {
    auto inv = a.inverse(u);
    if (!inv) throw std::invalid_argument("u = sum e_z is not invertible");
    uinv = std::move(*inv);
  }
  std::vector<Vec> out;
  for (const Vec& e : family) out.push_back(side == SideChoice::Left ? a.mul(uinv, e) : a.mul(e, uinv));
  IdempotentFamily fam = record_family(a, std::move(out));
  if (auto err = check_complete_orthogonal(a, fam)) throw std::logic_error("orthogonalization failed: " + *err);
  return fam;
}

IdempotentFamily lift_orthogonal_family(const StructureAlgebra& a, const std::vector<Vec>& family, const Subspace& h,
                                        SideChoice side) {
  Vec sum = a.zero();
  for (std::size_t w = 0; w < family.size(); ++w) {
    for (std::size_t z = 0; z < family.size(); ++z) {
      if (z != w && !h.contains(a.mul(family[w], family[z]))) {
        throw std::invalid_argument("f_w f_z is not in H for the pair (" + std::to_string(w) + ", " + std::to_string(z) + ")");
      }
    }
    sum = a.add(sum, family[w]);
  }
  if (!h.contains(a.sub(sum, a.one()))) throw std::invalid_argument("sum of the family is not in 1 + H");
  std::vector<Vec> lifted;
  std::vector<std::size_t> iters;
  for (const Vec& f : family) {
    IdempotentLift l = lift_idempotent(a, f, h);
    lifted.push_back(std::move(l.e));
    iters.push_back(l.iterations);
  }
  IdempotentFamily fam = orthogonalize(a, lifted, h, side);
  fam.iterations = std::move(iters);
  for (std::size_t z = 0; z < family.size(); ++z) {
    const Vec& e = fam.elements[z];
    if (!h.contains(a.sub(e, family[z]))) throw std::logic_error("lifted element left f_z + H");
    const Subspace closure = side == SideChoice::Left ? left_ideal_generated(a, {family[z]})
                                                      : right_ideal_generated(a, {family[z]});
    if (!closure.contains(e)) throw std::logic_error("lifted element is outside the chosen one-sided ideal");
  }
  return fam;
}

std::vector<Vec> idempotents_in_coset(const StructureAlgebra& a, const Vec& f, const Subspace& h) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    count *= a.field().order();
    if (count > 4096) throw std::invalid_argument("coset too large to enumerate");
  }
  std::vector<Vec> out;
  const std::uint32_t q = a.field().order();
  for (std::size_t c = 0; c < count; ++c) {
    Vec v = f;
    std::size_t rest = c;
    for (std::size_t i = 0; i < h.dim(); ++i) {
      vec_axpy(a.field(), static_cast<Elem>(rest % q), h.basis().row(i), v);
      rest /= q;
    }
    if (is_idempotent(a, v)) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace toporing
