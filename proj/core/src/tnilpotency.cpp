#include "toporing/tnilpotency.hpp"

#include <map>
#include <stdexcept>

#include "toporing/constructions.hpp"
#include "toporing/rng.hpp"

namespace toporing {

std::string to_string(PerfectVerdict v) {
  switch (v) {
    case PerfectVerdict::Perfect: return "PERFECT";
    case PerfectVerdict::NotPerfect: return "NOT_PERFECT";
    case PerfectVerdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

ModuleFamily uniserial_family(const FiniteField& f, std::size_t n_max) {
  if (n_max == 0) throw std::invalid_argument("n_max must be >= 1");
  const StructureAlgebra a = truncated_polynomial(f, n_max);
  ModuleFamily fam;
  fam.truncated = true;
  std::vector<Matrix> proj;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<Vec> gens;
    for (std::size_t k = n; k < n_max; ++k) gens.push_back(unit_vec(n_max, k));
    QuotientModule q = quotient_module(regular_module(a), Subspace::span(f, n_max, gens));
    fam.members.push_back(q.module);
    fam.labels.push_back("F[x]/(x^" + std::to_string(n) + ")");
    proj.push_back(q.projection);
  }
  for (std::size_t n = 1; n < n_max; ++n) {
    // x^k -> x^(k+1), read through the quotient projections
    Matrix shift(f, n, n + 1);
    for (std::size_t k = 0; k < n; ++k) shift.set_block(k, 0, proj[n].block(k + 1, 0, 1, n + 1));
    fam.connecting.push_back(std::move(shift));
  }
  return fam;
}

namespace {

bool is_hom(const FiniteModule& m, const FiniteModule& n, const Matrix& x) {
  if (x.rows() != m.dim() || x.cols() != n.dim()) return false;
  for (std::size_t g = 0; g < m.algebra().dim(); ++g) {
    if (!(m.action(g) * x == x * n.action(g))) return false;
  }
  return true;
}

// Radical hom bases for every ordered pair, computed once per family.
struct RadHoms {
  std::vector<std::vector<std::vector<Matrix>>> maps;
  explicit RadHoms(const ModuleFamily& fam) {
    const std::size_t k = fam.members.size();
    maps.assign(k, std::vector<std::vector<Matrix>>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) maps[i][j] = radical_homs(fam.members[i], fam.members[j]);
    }
  }
};

bool in_span(const FiniteField& f, const std::vector<Matrix>& basis, const Matrix& x) {
  std::vector<Vec> flat;
  for (const Matrix& b : basis) flat.push_back(b.flatten());
  return Subspace::span(f, x.rows() * x.cols(), flat).contains(x.flatten());
}

struct ChainSearch {
  const ModuleFamily& fam;
  const RadHoms& rad;
  std::size_t depth;
  std::map<std::pair<std::size_t, Vec>, std::size_t> failed;  // (member, element) -> depth known unreachable
  std::vector<std::size_t> members;
  std::vector<Matrix> maps;

  bool extend(std::size_t i, const Vec& v, std::size_t remaining) {
    if (remaining == 0) return true;
    auto key = std::make_pair(i, v);
    auto it = failed.find(key);
    if (it != failed.end() && it->second <= remaining) return false;
    std::vector<std::pair<std::size_t, const Matrix*>> options;
    if (i + 1 < fam.members.size() && i < fam.connecting.size()) options.emplace_back(i + 1, &fam.connecting[i]);
    for (std::size_t j = 0; j < fam.members.size(); ++j) {
      for (const Matrix& f : rad.maps[i][j]) options.emplace_back(j, &f);
    }
    for (const auto& [j, f] : options) {
      const Vec w = f->apply(v);
      if (vec_is_zero(w)) continue;
      members.push_back(j);
      maps.push_back(*f);
      if (extend(j, w, remaining - 1)) return true;
      members.pop_back();
      maps.pop_back();
    }
    failed[key] = remaining;
    return false;
  }
};

}  // namespace

std::optional<std::string> verify_chain(const ModuleFamily& fam, const NonisoChain& c) {
  if (c.members.size() != c.maps.size() + 1 || c.images.size() != c.maps.size()) return "chain shape mismatch";
  Vec v = c.element;
  for (std::size_t k = 0; k < c.maps.size(); ++k) {
    const FiniteModule& src = fam.members[c.members[k]];
    const FiniteModule& dst = fam.members[c.members[k + 1]];
    if (!is_hom(src, dst, c.maps[k])) return "chain map " + std::to_string(k) + " is not a homomorphism";
    if (!in_span(src.field(), radical_homs(src, dst), c.maps[k])) return "chain map " + std::to_string(k) + " is an isomorphism";
    v = c.maps[k].apply(v);
    if (v != c.images[k]) return "recorded image " + std::to_string(k) + " differs";
    if (vec_is_zero(v)) return "element dies at step " + std::to_string(k);
  }
  return std::nullopt;
}

TNilpotencyResult local_T_nilpotency_check(const ModuleFamily& fam, std::size_t depth, std::uint64_t seed,
                                           std::size_t samples) {
  if (depth == 0) throw std::invalid_argument("depth must be >= 1");
  Rng rng(seed);
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    if (!has_local_endomorphisms(fam.members[i], rng.next())) {
      throw std::invalid_argument("family member " + std::to_string(i) + " does not have a local endomorphism algebra");
    }
  }
  TNilpotencyResult out;
  out.depth = depth;
  const RadHoms rad(fam);
  if (!fam.truncated) {
    HaradaSaiCertificate cert;
    cert.seed = seed;
    for (const FiniteModule& m : fam.members) cert.length_bound = std::max(cert.length_bound, composition_length(m, seed));
    cert.composition_bound = (std::size_t{1} << cert.length_bound) - 1;
    const std::size_t k = fam.members.size();
    for (std::size_t s = 0; s < samples && k > 0; ++s) {
      std::size_t i = rng.below(k);
      Matrix x = Matrix::identity(fam.members[i].field(), fam.members[i].dim());
      for (std::size_t step = 0; step < cert.composition_bound && !x.is_zero(); ++step) {
        const std::size_t j = rng.below(k);
        Matrix f(x.field(), fam.members[i].dim(), fam.members[j].dim());
        for (const Matrix& b : rad.maps[i][j]) f = f + b.scaled(static_cast<Elem>(rng.below(x.field().order())));
        x = x * f;
        i = j;
      }
      if (!x.is_zero()) throw std::logic_error("Harada-Sai bound violated by a sampled composition");
      ++cert.samples;
    }
    out.kind = TNilKind::Certificate;
    out.certificate = cert;
    return out;
  }
  ChainSearch search{fam, rad, depth, {}, {}, {}};
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    for (std::size_t c = 0; c < fam.members[i].dim(); ++c) {
      const Vec v = unit_vec(fam.members[i].dim(), c);
      search.members = {i};
      search.maps.clear();
      if (search.extend(i, v, depth)) {
        NonisoChain chain;
        chain.members = search.members;
        chain.maps = search.maps;
        chain.element = v;
        Vec w = v;
        for (const Matrix& f : chain.maps) {
          w = f.apply(w);
          chain.images.push_back(w);
        }
        if (auto err = verify_chain(fam, chain)) throw std::logic_error("witness chain failed verification: " + *err);
        out.kind = TNilKind::Witness;
        out.witness = std::move(chain);
        return out;
      }
    }
  }
  out.kind = TNilKind::Unknown;
  return out;
}

PerfectDecompositionReport perfect_decomposition_verdict(const FiniteModule& m, std::size_t depth, std::uint64_t seed) {
  PerfectDecompositionReport rep;
  rep.depth = depth;
  DecompositionCertificate dc = decompose_indecomposable(m, seed);
  ModuleFamily fam;
  for (std::size_t i = 0; i < dc.summands.size(); ++i) {
    fam.members.push_back(dc.summands[i].module);
    fam.labels.push_back("summand " + std::to_string(i));
  }
  rep.tnil = local_T_nilpotency_check(fam, depth, seed);
  rep.decomposition = std::move(dc);
  rep.verdict = PerfectVerdict::Perfect;
  return rep;
}

PerfectDecompositionReport perfect_decomposition_verdict(const ModuleFamily& fam, std::size_t depth, std::uint64_t seed) {
  PerfectDecompositionReport rep;
  rep.depth = depth;
  rep.tnil = local_T_nilpotency_check(fam, depth, seed);
  switch (rep.tnil.kind) {
    case TNilKind::Certificate: rep.verdict = PerfectVerdict::Perfect; break;
    case TNilKind::Witness: rep.verdict = PerfectVerdict::NotPerfect; break;
    case TNilKind::Unknown: rep.verdict = PerfectVerdict::Unknown; break;
  }
  return rep;
}

std::optional<std::string> verify_cyclic_chain(const FiniteModule& m, const CyclicChain& c) {
  if (c.generators.size() != c.submodules.size()) return "chain shape mismatch";
  for (std::size_t k = 0; k < c.submodules.size(); ++k) {
    if (!(cyclic_submodule(m, c.generators[k]) == c.submodules[k])) return "term " + std::to_string(k) + " is not generated by its generator";
    if (c.submodules[k].dim() == 0) return "term " + std::to_string(k) + " is zero";
    if (k > 0) {
      const Subspace& prev = c.submodules[k - 1];
      if (!c.submodules[k].is_subset_of(prev) || c.submodules[k].dim() == prev.dim()) {
        return "term " + std::to_string(k) + " is not strictly contained in its predecessor";
      }
    }
  }
  return std::nullopt;
}

namespace {

struct CyclicSearch {
  const FiniteModule& m;
  std::size_t depth;
  std::vector<Vec> global;  // candidate generators
  bool enumerate_all;
  std::size_t budget;
  std::size_t nodes = 0;
  bool exhausted_budget = false;
  std::map<std::vector<Elem>, std::size_t> best;  // submodule -> longest chain starting there (capped)
  std::map<std::vector<Elem>, Vec> best_next;

  std::vector<Vec> candidates(const Subspace& c) {
    if (enumerate_all) return enumerate_subspace(c, 4096);
    std::vector<Vec> out = c.basis_vecs();
    for (const Vec& g : global) {
      if (c.contains(g)) out.push_back(g);
    }
    return out;
  }

  // Longest chain starting at c (counting c), capped at depth - already.
  std::size_t explore(const Subspace& c, std::size_t already) {
    const auto key = c.basis().data();
    if (auto it = best.find(key); it != best.end()) return it->second;
    if (++nodes > budget) {
      exhausted_budget = true;
      return 1;
    }
    std::size_t longest = 1;
    Vec next;
    if (already + 1 < depth) {
      for (const Vec& g : candidates(c)) {
        if (vec_is_zero(g)) continue;
        const Subspace s = cyclic_submodule(m, g);
        if (s.dim() >= c.dim()) continue;
        const std::size_t len = 1 + explore(s, already + 1);
        if (len > longest) {
          longest = len;
          next = g;
          if (already + longest >= depth) break;
        }
      }
    }
    best[key] = longest;
    if (!next.empty()) best_next[key] = next;
    return longest;
  }
};

}  // namespace

CoperfectResult coperfect_witness_search(const FiniteModule& m0, std::size_t depth, const std::vector<Matrix>& hints,
                                         std::size_t node_budget) {
  if (depth == 0) throw std::invalid_argument("depth must be >= 1");
  const FiniteModule m = as_right(m0);
  CoperfectResult out;
  out.depth = depth;
  const std::size_t size = module_cardinality(m);
  CyclicSearch s{m, depth, {}, size != 0 && size <= 4096, node_budget, 0, false, {}, {}};
  if (!s.enumerate_all) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      s.global.push_back(unit_vec(m.dim(), c));
      for (const Matrix& h : hints) {
        Vec w = unit_vec(m.dim(), c);
        for (std::size_t k = 0; k < depth; ++k) {
          w = h.apply(w);
          if (vec_is_zero(w)) break;
          s.global.push_back(w);
        }
      }
    }
  }
  const std::vector<Vec> starts = s.enumerate_all ? enumerate_subspace(Subspace::whole(m.field(), m.dim()), 4096) : s.global;
  std::size_t best_len = 0;
  Vec best_start;
  for (const Vec& g : starts) {
    if (vec_is_zero(g)) continue;
    const std::size_t len = s.explore(cyclic_submodule(m, g), 0);
    if (len > best_len) {
      best_len = len;
      best_start = g;
      if (best_len >= depth) break;
    }
  }
  if (best_len > 0) {
    Vec g = best_start;
    for (;;) {
      Subspace c = cyclic_submodule(m, g);
      out.longest.generators.push_back(g);
      out.longest.submodules.push_back(c);
      auto it = s.best_next.find(c.basis().data());
      if (it == s.best_next.end() || out.longest.length() >= depth) break;
      g = it->second;
    }
  }
  if (auto err = verify_cyclic_chain(m, out.longest)) throw std::logic_error("cyclic chain failed verification: " + *err);
  out.kind = out.longest.length() >= depth ? CoperfectKind::Chain : CoperfectKind::Terminates;
  out.exhaustive = s.enumerate_all && !s.exhausted_budget;
  return out;
}

}  // namespace toporing
