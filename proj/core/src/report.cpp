#include "toporing/report.hpp"

namespace toporing::io {

namespace {

template <typename T>
Json list(const std::vector<T>& xs) {
  Json out = Json::array();
  for (const T& x : xs) out.push_back(to_json(x));
  return out;
}

Json vec_list(const std::vector<Vec>& xs) {
  Json out = Json::array();
  for (const Vec& x : xs) out.push_back(x);
  return out;
}

Json opt_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json lift_json(const IdempotentLift& l) {
  return Json{{"element", l.e}, {"iterations", l.iterations}, {"nil_index", l.nil_index}, {"iteration_bound", l.iteration_bound}};
}

}  // namespace

Json to_json(const FactorMultiset& f) {
  Json out = Json::array();
  for (const auto& [q, n] : f) out.push_back(Json{{"residue_order", q}, {"matrix_size", n}});
  return out;
}

Json to_json(const WedderburnDatum& w) {
  Json comps = Json::array();
  for (const WedderburnComponent& c : w.components) {
    comps.push_back(Json{{"central_idempotent", c.central_idempotent},
                         {"matrix_size", c.n},
                         {"degree", c.degree},
                         {"residue_order", c.residue_order},
                         {"theta", c.theta},
                         {"theta_minpoly", c.theta_minpoly.coeffs()},
                         {"matrix_units", vec_list(c.units)}});
  }
  const auto err = verify_wedderburn(w);
  return Json{{"factors", to_json(factor_multiset(w))}, {"components", comps}, {"model", to_json(w.model)},
              {"isomorphism", to_json(w.iso)},        {"seed", w.seed},       {"verified", !err.has_value()}};
}

Json to_json(const DecompositionCertificate& c) {
  Json summands = Json::array();
  for (const Summand& s : c.summands) {
    summands.push_back(Json{{"dim", s.module.dim()},
                            {"iso_class", s.iso_class},
                            {"residue_order", s.residue_order},
                            {"injection", to_json(s.injection)},
                            {"projection", to_json(s.projection)},
                            {"idempotent", to_json(s.idempotent)},
                            {"class_isomorphism", to_json(s.class_iso)}});
  }
  const auto err = verify_decomposition(c);
  return Json{{"summands", summands}, {"classes", c.classes}, {"seed", c.seed}, {"verified", !err.has_value()}};
}

Json to_json(const TNilpotencyResult& r) {
  Json j{{"depth", r.depth}};
  j["kind"] = r.kind == TNilKind::Certificate ? "certificate" : r.kind == TNilKind::Witness ? "witness" : "unknown";
  if (r.certificate) {
    j["harada_sai"] = Json{{"length_bound", r.certificate->length_bound},
                           {"composition_bound", r.certificate->composition_bound},
                           {"samples", r.certificate->samples},
                           {"seed", r.certificate->seed}};
  }
  if (r.witness) {
    j["chain"] = Json{{"members", r.witness->members}, {"maps", list(r.witness->maps)}, {"element", r.witness->element},
                      {"images", vec_list(r.witness->images)}, {"length", r.witness->length()}};
  }
  return j;
}

Json to_json(const PerfectDecompositionReport& r) {
  Json j{{"verdict", to_string(r.verdict)}, {"depth", r.depth}, {"t_nilpotency", to_json(r.tnil)}};
  if (r.decomposition) j["decomposition"] = to_json(*r.decomposition);
  return j;
}

Json to_json(const CyclicChain& c) {
  return Json{{"generators", vec_list(c.generators)}, {"submodules", list(c.submodules)}, {"length", c.length()}};
}

Json to_json(const CoperfectResult& r) {
  return Json{{"kind", r.kind == CoperfectKind::Chain ? "chain" : "terminates"},
              {"depth", r.depth},
              {"exhaustive", r.exhaustive},
              {"longest", to_json(r.longest)}};
}

Json to_json(const RadicalTowerReport& r) {
  Json tp = Json::array();
  for (const TpCheck& c : r.tp_checks) tp.push_back(Json{{"level", c.level}, {"quotient_level", c.quotient_level}, {"agrees", c.agrees}});
  return Json{{"radical", list(r.radical.levels)},
              {"transition_surjective", r.transition_surjective},
              {"tp_checks", tp},
              {"maximal_oracle", r.maximal_oracle},
              {"maximal_oracle_ran", r.maximal_oracle_ran},
              {"ok", r.ok()}};
}

Json to_json(const TowerNilpotencyCertificate& c) { return Json{{"indices", c.indices}, {"depth", c.depth}}; }

Json to_json(const StrongClosureCertificate& c) {
  Json fam = Json::array(), lifts = Json::array();
  for (const auto& f : c.family) fam.push_back(vec_list(f));
  for (const auto& l : c.lifts) lifts.push_back(vec_list(l));
  return Json{{"family", fam}, {"lifts", lifts}, {"repairs", c.repairs}, {"depth", c.depth}, {"seed", c.seed}};
}

Json to_json(const SemisimpleClassification& c) {
  Json matching = Json::array();
  for (const auto& level : c.matching) {
    Json row = Json::array();
    for (const auto& m : level) row.push_back(opt_size(m));
    matching.push_back(row);
  }
  return Json{{"semisimple", c.semisimple}, {"witness_level", c.witness_level}, {"factors", to_json(c.factors)},
              {"matching", matching}};
}

Json to_json(const PerfectnessReport& r) {
  return Json{{"verdict", to_string(r.verdict)},
              {"reason", r.reason},
              {"implied", r.implied},
              {"radical", to_json(r.radical)},
              {"t_nilpotency", to_json(r.nilpotency)},
              {"strong_closure", to_json(r.strong_closure)},
              {"semisimple_quotient", to_json(r.quotient)},
              {"depth", r.depth},
              {"seed", r.seed}};
}

Json to_json(const IdempotentFamily& f) {
  Json products = Json::array();
  for (const auto& row : f.products) products.push_back(vec_list(row));
  return Json{{"elements", vec_list(f.elements)}, {"products", products}, {"residual", f.residual}, {"iterations", f.iterations}};
}

Json to_json(const TowerLift& l) {
  Json per = Json::array();
  for (const IdempotentLift& x : l.per_level) per.push_back(lift_json(x));
  return Json{{"levels", vec_list(l.levels)}, {"per_level", per}};
}

Json to_json(const TowerFamily& f) { return Json{{"levels", list(f.levels)}}; }

Json to_json(const CornerReport& r) {
  return Json{{"samples", r.samples},          {"corner_dim", r.corner_dim}, {"free_dim", r.free_dim},
              {"rows_match", r.rows_match},    {"ring_iso", r.ring_iso},     {"action_match", r.action_match},
              {"point_measure", r.point_measure}, {"ok", r.ok()}};
}

Json to_json(const ContratensorResult& r) {
  return Json{{"tensor_dim", r.tensor_dim},     {"relation_count", r.relation_count}, {"cokernel_dim", r.cokernel_dim},
              {"target_dim", r.target_dim},     {"all_elements", r.all_elements},     {"to_cokernel", to_json(r.to_cokernel)},
              {"from_cokernel", to_json(r.from_cokernel)}, {"verified", r.verified}};
}

Json to_json(const BassFlatDatum& b) {
  return Json{{"prefix", vec_list(b.prefix)},
              {"period", vec_list(b.period)},
              {"chain_dims", b.chain_sizes},
              {"stabilization", b.stabilization},
              {"colimit", to_json(b.colimit)},
              {"idempotent", b.idempotent},
              {"verdict", b.projective ? "PROJECTIVE" : "NOT_PROJECTIVE"}};
}

Json to_json(const SplitReport& r) {
  Json j{{"verdict", to_string(r.verdict)}, {"regime", r.regime}, {"depth", r.depth}, {"section", list(r.section)}};
  if (r.obstruction) {
    j["obstruction"] = Json{{"height_bound", r.obstruction->height_bound}, {"divisor", vec_list(r.obstruction->divisor)}};
  }
  return j;
}

Json to_json(const SigmaCoperfectResult& r) {
  return Json{{"kind", r.kind == SigmaKind::Witness ? "witness" : "certificate"},
              {"depth", r.depth},
              {"level", r.level},
              {"copies", r.copies},
              {"max_chain", r.max_chain},
              {"chain_copies", r.chain_copies},
              {"length_bound", opt_size(r.length_bound)},
              {"chain", to_json(r.chain)},
              {"exhaustive", r.exhaustive},
              {"refined", r.refined}};
}

Json to_json(const BridgeReport& r) {
  return Json{{"perfect_decomposition", to_json(r.perfect)},
              {"sigma_coperfect", to_json(r.sigma)},
              {"endo_levels_semisimple", r.endo_levels_semisimple},
              {"module_semisimple", r.module_semisimple},
              {"consistent", r.consistent},
              {"transcript", r.transcript}};
}

}  // namespace toporing::io
