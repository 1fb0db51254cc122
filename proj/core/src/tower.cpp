#include "toporing/tower.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "toporing/constructions.hpp"
#include "toporing/module.hpp"
#include "toporing/radical.hpp"
#include "toporing/rng.hpp"

namespace toporing {

Matrix RingTower::projection(std::size_t from, std::size_t to) const {
  if (to > from || from >= levels.size()) throw std::out_of_range("tower projection out of range");
  Matrix p = Matrix::identity(field(), levels[from].dim());
  for (std::size_t n = from; n > to; --n) p = p * transitions[n - 1];
  return p;
}

Vec RingTower::project(const Vec& x, std::size_t from, std::size_t to) const {
  Vec v = x;
  for (std::size_t n = from; n > to; --n) v = transitions[n - 1].apply(v);
  return v;
}

TowerError::TowerError(std::vector<TowerDiagnostic> d)
    : std::invalid_argument("invalid tower: level " + std::to_string(d.front().level) + ": " + d.front().message),
      diagnostics(std::move(d)) {}

std::vector<TowerDiagnostic> validate_tower(const RingTower& t) {
  std::vector<TowerDiagnostic> out;
  if (t.levels.empty()) return {{0, "tower has no levels"}};
  if (t.transitions.size() + 1 != t.levels.size()) return {{0, "expected one transition per consecutive pair of levels"}};
  for (std::size_t n = 0; n < t.levels.size(); ++n) {
    if (t.levels[n].field() != t.field()) out.push_back({n, "level is over a different field"});
  }
  if (!out.empty()) return out;
  for (std::size_t n = 0; n + 1 < t.levels.size(); ++n) {
    const StructureAlgebra& src = t.levels[n + 1];
    const StructureAlgebra& dst = t.levels[n];
    const Matrix& pi = t.transitions[n];
    if (pi.rows() != src.dim() || pi.cols() != dst.dim()) {
      out.push_back({n, "transition has shape " + std::to_string(pi.rows()) + "x" + std::to_string(pi.cols())});
      continue;
    }
    if (auto err = check_homomorphism(AlgebraMap{src, dst, pi})) out.push_back({n, "transition is not a homomorphism: " + *err});
    if (rank(pi) != dst.dim()) out.push_back({n, "transition is not surjective"});
    const Subspace ker = Subspace::of_rows(left_kernel(pi));
    if (!is_left_ideal(src, ker) || !is_right_ideal(src, ker)) out.push_back({n, "transition kernel is not two-sided"});
  }
  return out;
}

RingTower build_tower(std::string name, std::vector<StructureAlgebra> levels, std::vector<Matrix> transitions,
                      TowerIntent intent) {
  RingTower t{std::move(name), std::move(levels), std::move(transitions), intent};
  auto diags = validate_tower(t);
  if (!diags.empty()) throw TowerError(std::move(diags));
  return t;
}

RingTower constant_tower(const StructureAlgebra& a, std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("depth must be >= 1");
  std::vector<StructureAlgebra> levels(depth, a);
  std::vector<Matrix> tr(depth - 1, Matrix::identity(a.field(), a.dim()));
  return build_tower("constant", std::move(levels), std::move(tr), TowerIntent::Exact);
}

RingTower adic_tower(const FiniteField& f, std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("depth must be >= 1");
  std::vector<StructureAlgebra> levels;
  std::vector<Matrix> tr;
  for (std::size_t n = 0; n < depth; ++n) {
    levels.push_back(truncated_polynomial(f, n + 1));
    if (n > 0) {
      Matrix pi(f, n + 1, n);
      for (std::size_t s = 0; s < n; ++s) pi(s, s) = 1;
      tr.push_back(std::move(pi));
    }
  }
  return build_tower("adic", std::move(levels), std::move(tr));
}

RingTower matrix_adic_tower(const FiniteField& f, std::size_t k, std::size_t depth) {
  if (depth == 0 || k == 0) throw std::invalid_argument("depth and matrix size must be >= 1");
  std::vector<StructureAlgebra> levels;
  std::vector<Matrix> tr;
  for (std::size_t n = 0; n < depth; ++n) {
    levels.push_back(matrix_ring(truncated_polynomial(f, n + 1), k));
    if (n > 0) {
      Matrix pi(f, k * k * (n + 1), k * k * n);
      for (std::size_t ij = 0; ij < k * k; ++ij) {
        for (std::size_t s = 0; s < n; ++s) pi(ij * (n + 1) + s, ij * n + s) = 1;
      }
      tr.push_back(std::move(pi));
    }
  }
  return build_tower("matrix-adic", std::move(levels), std::move(tr));
}

RingTower product_tower(const std::vector<StructureAlgebra>& factors, std::size_t initial) {
  if (initial == 0 || initial > factors.size()) throw std::invalid_argument("initial factor count out of range");
  std::vector<StructureAlgebra> levels;
  std::vector<Matrix> tr;
  for (std::size_t n = initial; n <= factors.size(); ++n) {
    levels.push_back(product(std::vector<StructureAlgebra>(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(n))));
    if (n > initial) {
      const StructureAlgebra& src = levels[levels.size() - 1];
      const StructureAlgebra& dst = levels[levels.size() - 2];
      Matrix pi(src.field(), src.dim(), dst.dim());
      for (std::size_t c = 0; c < dst.dim(); ++c) pi(c, c) = 1;
      tr.push_back(std::move(pi));
    }
  }
  return build_tower("product", std::move(levels), std::move(tr));
}

bool RadicalTowerReport::ok() const {
  auto all = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
  return all(transition_surjective) && all(maximal_oracle) &&
         std::all_of(tp_checks.begin(), tp_checks.end(), [](const TpCheck& c) { return c.agrees; });
}

RadicalTowerReport topological_jacobson_radical(const RingTower& t) {
  RadicalTowerReport rep;
  for (const StructureAlgebra& r : t.levels) {
    rep.radical.levels.push_back(radical(r).space);
    const FiniteModule reg = regular_module(r);
    const std::size_t size = module_cardinality(reg);
    const bool small = size != 0 && size <= 1024;
    rep.maximal_oracle_ran.push_back(small);
    rep.maximal_oracle.push_back(!small || radical_by_maximals(reg) == rep.radical.levels.back());
  }
  for (std::size_t n = 0; n + 1 < t.depth(); ++n) {
    rep.transition_surjective.push_back(rep.radical.levels[n + 1].image(t.transitions[n]) == rep.radical.levels[n]);
  }
  for (std::size_t n = 0; n < t.depth(); ++n) {
    for (std::size_t m = 0; m <= n; ++m) {
      const Matrix p = t.projection(n, m);
      const Subspace ideal = Subspace::of_rows(left_kernel(p));
      const Subspace via_formula = ideal.sum(rep.radical.levels[n]);
      const Subspace via_quotient = preimage(p, radical(t.levels[m]).space);
      rep.tp_checks.push_back({n, m, via_formula == via_quotient});
    }
  }
  return rep;
}

TowerNilpotencyCertificate t_nilpotency_check(const RingTower& t, const IdealTower& h, std::size_t depth) {
  if (h.levels.size() != t.depth()) throw std::invalid_argument("ideal tower depth differs from the tower");
  TowerNilpotencyCertificate cert;
  cert.depth = depth;
  for (std::size_t n = 0; n < t.depth(); ++n) {
    if (!h.levels[n].is_subset_of(radical(t.levels[n]).space)) {
      throw std::invalid_argument("H is not inside the radical at level " + std::to_string(n) + ", so it is not topologically nil");
    }
    const auto k = nilpotency_index(t.levels[n], h.levels[n]);
    if (!k) throw std::logic_error("radical ideal is not nilpotent at level " + std::to_string(n));
    cert.indices.push_back(*k);
  }
  return cert;
}

QuotientTower quotient_tower(const RingTower& t, const IdealTower& h) {
  QuotientTower q;
  for (std::size_t n = 0; n < t.depth(); ++n) q.quotients.push_back(quotient(t.levels[n], h.levels[n]));
  std::vector<StructureAlgebra> levels;
  std::vector<Matrix> tr;
  for (const Quotient& x : q.quotients) levels.push_back(x.algebra);
  for (std::size_t n = 0; n + 1 < t.depth(); ++n) {
    const Quotient& src = q.quotients[n + 1];
    const Quotient& dst = q.quotients[n];
    Matrix pi(t.field(), src.algebra.dim(), dst.algebra.dim());
    for (std::size_t i = 0; i < src.algebra.dim(); ++i) {
      const Vec img = dst.projection.apply(t.transitions[n].apply(src.lift(unit_vec(src.algebra.dim(), i))));
      std::copy(img.begin(), img.end(), pi.row(i).begin());
    }
    tr.push_back(std::move(pi));
  }
  q.tower = build_tower(t.name + "/H", std::move(levels), std::move(tr), t.intent);
  return q;
}

namespace {

// h in H_{n+1} with pi(h) = delta
Vec lift_through_h(const RingTower& t, const IdealTower& h, std::size_t n, const Vec& delta) {
  const Subspace& hn1 = h.levels[n + 1];
  if (hn1.dim() == 0) {
    if (!vec_is_zero(delta)) throw std::logic_error("H transition is not surjective");
    return Vec(t.levels[n + 1].dim(), 0);
  }
  const Matrix img = hn1.basis() * t.transitions[n];
  const Matrix b = Matrix::from_rows(t.field(), 1, [&] {
    std::vector<Vec> rows;
    for (Elem x : delta) rows.push_back(Vec{x});
    return rows;
  }());
  const SolveResult s = rref_solve(img.transpose(), b);
  if (!s.solutions[0]) throw std::logic_error("H transition is not surjective at level " + std::to_string(n));
  const Vec& c = *s.solutions[0];
  Vec out(t.levels[n + 1].dim(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) vec_axpy(t.field(), c[i], hn1.basis().row(i), out);
  return out;
}

StrongClosureCertificate lift_family_impl(const RingTower& t, const IdealTower& h,
                                          const std::vector<std::vector<Vec>>& family, Rng* perturb) {
  const QuotientTower q = quotient_tower(t, h);
  StrongClosureCertificate cert;
  cert.family = family;
  cert.depth = t.depth();
  for (const auto& member : family) {
    std::vector<Vec> lifts;
    std::size_t repairs = 0;
    for (std::size_t n = 0; n < t.depth(); ++n) {
      Vec r = q.quotients[n].lift(member[n]);
      if (perturb != nullptr && !vec_is_zero(member[n])) r = t.levels[n].add(r, random_in(h.levels[n], *perturb));
      if (n > 0) {
        const Vec delta = t.levels[n - 1].sub(t.transitions[n - 1].apply(r), lifts.back());
        if (!h.levels[n - 1].contains(delta)) throw std::logic_error("family is not compatible across levels");
        if (!vec_is_zero(delta)) {
          r = t.levels[n].sub(r, lift_through_h(t, h, n - 1, delta));
          ++repairs;
        }
      }
      lifts.push_back(std::move(r));
    }
    cert.lifts.push_back(std::move(lifts));
    cert.repairs.push_back(repairs);
  }
  if (auto err = verify_strong_closure(t, h, cert)) throw std::logic_error("strong closure lift failed: " + *err);
  return cert;
}

}  // namespace

std::optional<std::string> verify_strong_closure(const RingTower& t, const IdealTower& h, const StrongClosureCertificate& c) {
  const QuotientTower q = quotient_tower(t, h);
  if (c.lifts.size() != c.family.size()) return "lift count differs from family size";
  for (std::size_t x = 0; x < c.family.size(); ++x) {
    bool vanished = true;
    for (std::size_t n = 0; n < t.depth(); ++n) {
      const std::string at = "member " + std::to_string(x) + " level " + std::to_string(n);
      if (q.quotients[n].projection.apply(c.lifts[x][n]) != c.family[x][n]) return at + ": lift does not reduce to the family";
      if (n + 1 < t.depth() && t.transitions[n].apply(c.lifts[x][n + 1]) != c.lifts[x][n]) return at + ": lifts are not compatible";
      vanished = vanished && vec_is_zero(c.family[x][n]);
      if (vanished && !vec_is_zero(c.lifts[x][n])) return at + ": lift of a vanishing term is nonzero";
    }
  }
  return std::nullopt;
}

StrongClosureCertificate lift_zero_convergent_family(const RingTower& t, const IdealTower& h,
                                                     const std::vector<std::vector<Vec>>& family) {
  return lift_family_impl(t, h, family, nullptr);
}

StrongClosureCertificate strongly_closed_check(const RingTower& t, const IdealTower& h, std::size_t x_size,
                                               std::size_t depth, std::uint64_t seed) {
  const QuotientTower q = quotient_tower(t, h);
  const std::size_t top = t.depth() - 1;
  Rng rng(seed);
  std::vector<std::vector<Vec>> family;
  for (std::size_t x = 0; x < x_size; ++x) {
    // member x vanishes below level x
    Subspace allowed = Subspace::whole(t.field(), q.tower.levels[top].dim());
    if (x > 0 && x <= top) allowed = Subspace::of_rows(left_kernel(q.tower.projection(top, x - 1)));
    if (x > top) allowed = Subspace(t.field(), q.tower.levels[top].dim());
    const Vec s = random_in(allowed, rng);
    std::vector<Vec> member;
    for (std::size_t n = 0; n <= top; ++n) member.push_back(q.tower.project(s, top, n));
    family.push_back(std::move(member));
  }
  StrongClosureCertificate cert = lift_family_impl(t, h, family, &rng);
  cert.depth = depth;
  cert.seed = seed;
  return cert;
}

SemisimpleClassification classify_semisimple(const RingTower& t, std::uint64_t seed) {
  SemisimpleClassification out;
  for (std::size_t n = 0; n < t.depth(); ++n) {
    if (radical(t.levels[n]).space.dim() != 0) {
      out.witness_level = n;
      return out;
    }
  }
  Rng rng(seed);
  std::vector<WedderburnDatum> w;
  for (const StructureAlgebra& r : t.levels) w.push_back(wedderburn(r, rng.next()));
  out.factors = factor_multiset(w.front());
  for (std::size_t n = 0; n + 1 < t.depth(); ++n) {
    const auto& src = w[n + 1].components;
    const auto& dst = w[n].components;
    std::vector<std::optional<std::size_t>> match;
    std::vector<std::size_t> hits(dst.size(), 0);
    for (const WedderburnComponent& c : src) {
      const Vec img = t.transitions[n].apply(c.central_idempotent);
      if (vec_is_zero(img)) {
        match.emplace_back(std::nullopt);
        out.factors.emplace_back(c.residue_order, c.n);
        continue;
      }
      auto it = std::find_if(dst.begin(), dst.end(), [&](const WedderburnComponent& d) { return d.central_idempotent == img; });
      if (it == dst.end()) throw std::logic_error("central idempotent does not map to a component at level " + std::to_string(n));
      const auto k = static_cast<std::size_t>(it - dst.begin());
      if (it->n != c.n || it->residue_order != c.residue_order) throw std::logic_error("matched components differ in type");
      ++hits[k];
      match.emplace_back(k);
    }
    if (std::any_of(hits.begin(), hits.end(), [](std::size_t h) { return h != 1; })) {
      throw std::logic_error("components of level " + std::to_string(n) + " are not matched exactly once");
    }
    out.matching.push_back(std::move(match));
  }
  std::sort(out.factors.begin(), out.factors.end());
  if (out.factors != factor_multiset(w.back())) throw std::logic_error("tracked factors differ from the top level");
  out.semisimple = true;
  return out;
}

std::string to_string(TowerVerdict v) {
  switch (v) {
    case TowerVerdict::Perfect: return "PERFECT";
    case TowerVerdict::NotPerfect: return "NOT_PERFECT";
    case TowerVerdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

PerfectnessReport classify_perfect(const RingTower& t, std::size_t depth, std::uint64_t seed) {
  if (depth == 0) throw std::invalid_argument("depth must be >= 1");
  PerfectnessReport rep;
  rep.depth = depth;
  rep.seed = seed;
  Rng rng(seed);
  rep.radical = topological_jacobson_radical(t);
  rep.nilpotency = t_nilpotency_check(t, rep.radical.radical, depth);
  rep.strong_closure = strongly_closed_check(t, rep.radical.radical, 3, depth, rng.next());
  rep.quotient = classify_semisimple(quotient_tower(t, rep.radical.radical).tower, rng.next());
  if (!rep.radical.ok()) throw std::logic_error("radical tower failed its exactness checks");
  if (!rep.quotient.semisimple) throw std::logic_error("quotient by the radical tower is not semisimple");
  rep.verdict = TowerVerdict::Perfect;
  rep.reason =
      "two-sided open ideal base: every level is a finite ring, so the radical is nilpotent levelwise, strongly "
      "closed by section repair, and the quotient tower is semisimple";
  rep.implied = {
      "radical topologically left T-nilpotent",
      "radical strongly closed",
      "quotient by the radical topologically semisimple",
      "every flat left contramodule is projective",
      "every left contramodule has a projective cover",
      "descending chains of cyclic discrete right modules terminate",
  };
  return rep;
}

Vec idempotent_power(const StructureAlgebra& a, const Vec& x) {
  std::map<Vec, std::size_t> seen;
  Vec p = x;
  for (std::size_t i = 1; i <= (std::size_t{1} << 16); ++i) {
    auto [it, fresh] = seen.emplace(p, i);
    if (!fresh) {
      const std::size_t first = it->second;
      const std::size_t period = i - first;
      const std::size_t k = ((first + period - 1) / period) * period;
      Vec e = a.pow(x, k);
      if (a.mul(e, e) != e) throw std::logic_error("power is not idempotent");
      return e;
    }
    p = a.mul(p, x);
  }
  throw std::runtime_error("power sequence did not cycle within the search limit");
}

TowerLift lift_idempotent_tower(const RingTower& t, const IdealTower& h, const Vec& f) {
  const std::size_t top = t.depth() - 1;
  const IdempotentLift head = lift_idempotent(t.levels[top], f, h.levels[top]);
  TowerLift out;
  for (std::size_t n = 0; n <= top; ++n) {
    IdempotentLift l = lift_idempotent(t.levels[n], t.project(f, top, n), h.levels[n]);
    if (l.e != t.project(head.e, top, n)) throw std::logic_error("levelwise lift differs from the projected lift at level " + std::to_string(n));
    out.levels.push_back(l.e);
    out.per_level.push_back(std::move(l));
  }
  return out;
}

namespace {

template <class Op>
TowerFamily levelwise_family(const RingTower& t, const std::vector<Vec>& family, Op op) {
  const std::size_t top = t.depth() - 1;
  TowerFamily out;
  for (std::size_t n = 0; n <= top; ++n) {
    std::vector<Vec> proj;
    for (const Vec& f : family) proj.push_back(t.project(f, top, n));
    out.levels.push_back(op(n, proj));
    if (auto err = check_complete_orthogonal(t.levels[n], out.levels.back())) {
      throw std::logic_error("level " + std::to_string(n) + ": " + *err);
    }
  }
  for (std::size_t n = 0; n < top; ++n) {
    for (std::size_t z = 0; z < family.size(); ++z) {
      if (t.project(out.levels[top].elements[z], top, n) != out.levels[n].elements[z]) {
        throw std::logic_error("levelwise family differs from the projected family at level " + std::to_string(n));
      }
    }
  }
  return out;
}

}  // namespace

TowerFamily lift_orthogonal_family_tower(const RingTower& t, const IdealTower& h, const std::vector<Vec>& family,
                                         SideChoice side) {
  return levelwise_family(t, family, [&](std::size_t n, const std::vector<Vec>& fam) {
    return lift_orthogonal_family(t.levels[n], fam, h.levels[n], side);
  });
}

TowerFamily orthogonalize_tower(const RingTower& t, const IdealTower& h, const std::vector<Vec>& family, SideChoice side) {
  return levelwise_family(t, family, [&](std::size_t n, const std::vector<Vec>& fam) {
    return orthogonalize(t.levels[n], fam, h.levels[n], side);
  });
}

TowerFamily lift_from_quotient(const RingTower& t, const IdealTower& h, const std::vector<Vec>& quotient_family,
                               bool perturb, std::uint64_t seed) {
  const QuotientTower q = quotient_tower(t, h);
  const std::size_t top = t.depth() - 1;
  std::vector<std::vector<Vec>> family;
  for (const Vec& e : quotient_family) {
    std::vector<Vec> member;
    for (std::size_t n = 0; n <= top; ++n) member.push_back(q.tower.project(e, top, n));
    family.push_back(std::move(member));
  }
  Rng rng(seed);
  const StrongClosureCertificate cert = lift_family_impl(t, h, family, perturb ? &rng : nullptr);
  std::vector<Vec> lifted;
  for (const auto& l : cert.lifts) lifted.push_back(l[top]);
  TowerFamily out = lift_orthogonal_family_tower(t, h, lifted);
  for (std::size_t z = 0; z < quotient_family.size(); ++z) {
    if (q.quotients[top].projection.apply(out.levels[top].elements[z]) != quotient_family[z]) {
      throw std::logic_error("lifted family does not reduce to the quotient family");
    }
  }
  return out;
}

}  // namespace toporing
