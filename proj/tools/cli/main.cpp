#include <filesystem>
#include <functional>
#include <iostream>
#include <map>

#include "../acceptance/suites.hpp"
#include "CLI11.hpp"
#include "toporing/constructions.hpp"
#include "toporing/radical.hpp"
#include "toporing/report.hpp"

using namespace toporing;
using io::Json;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInconsistent = 4;

struct JobSpec {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::size_t depth = 5;
  std::size_t window = 6;
  std::uint64_t seed = 1;
  std::string out;
  std::size_t y = 2;
  bool contra = false;
  std::string data = TOPORING_DATA_DIR;
};

/// Thrown after the report is written when it shows a contradiction between equivalent verdicts.
struct Inconsistent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json header(const JobSpec& job) {
  std::vector<std::string> names;
  for (const std::string& p : job.inputs) names.push_back(fs::path(p).filename().string());
  return Json{{"command", job.subcommand}, {"inputs", names}, {"seed", job.seed}, {"depth", job.depth}, {"window", job.window}};
}

Json algebra_summary(const StructureAlgebra& a) {
  return Json{{"dim", a.dim()}, {"field", io::to_json(a.field())}, {"label", a.label()}};
}

Json load(const std::string& p) { return io::read_file(p); }
fs::path dir_of(const std::string& p) { return fs::path(p).parent_path(); }

Json cmd_radical(const JobSpec& job) {
  const StructureAlgebra a = io::load_algebra(job.inputs[0]);
  const SubspaceIdeal r = radical(a);
  Json j = header(job);
  j["algebra"] = algebra_summary(a);
  j["radical"] = io::to_json(r.space);
  j["semisimple"] = r.space.dim() == 0;
  const auto idx = nilpotency_index(a, r.space);
  j["nilpotency_index"] = idx ? Json(*idx) : Json(nullptr);
  const bool small = algebra_cardinality(a) != 0 && algebra_cardinality(a) <= kBruteforceLimit;
  j["oracle"] = Json{{"ran", small}, {"agrees", small ? Json(radical_bruteforce(a) == r.space) : Json(nullptr)}};
  if (small && !(radical_bruteforce(a) == r.space)) throw Inconsistent("trace radical differs from the definition");
  return j;
}

Json cmd_wedderburn(const JobSpec& job) {
  const StructureAlgebra a = io::load_algebra(job.inputs[0]);
  Json j = header(job);
  j["algebra"] = algebra_summary(a);
  const SubspaceIdeal r = radical(a);
  j["radical_dim"] = r.space.dim();
  if (r.space.dim() == 0) {
    j["decomposition"] = io::to_json(wedderburn(a, job.seed));
    j["of_quotient"] = false;
  } else {
    j["decomposition"] = io::to_json(wedderburn(quotient(a, r.space).algebra, job.seed));
    j["of_quotient"] = true;
  }
  j["factors"] = j["decomposition"]["factors"];
  if (!j["decomposition"]["verified"].get<bool>()) throw Inconsistent("Wedderburn datum fails verification");
  return j;
}

Json cmd_decompose(const JobSpec& job) {
  const FiniteModule m = io::load_module(job.inputs[0]);
  Json j = header(job);
  j["module_dim"] = m.dim();
  const PerfectDecompositionReport p = perfect_decomposition_verdict(m, job.depth, job.seed);
  j["report"] = io::to_json(p);
  if (p.verdict != PerfectVerdict::Perfect) throw Inconsistent("finite module without a perfect decomposition");
  return j;
}

Json cmd_classify_tower(const JobSpec& job) {
  const RingTower t = io::load_tower(job.inputs[0]);
  Json j = header(job);
  j["tower"] = Json{{"name", t.name}, {"depth", t.depth()}};
  const RadicalTowerReport r = topological_jacobson_radical(t);
  j["radical"] = io::to_json(r);
  j["t_nilpotency"] = io::to_json(t_nilpotency_check(t, r.radical, job.depth));
  j["semisimple"] = io::to_json(classify_semisimple(t, job.seed));
  if (!r.ok()) throw Inconsistent("radical tower fails its exactness checks");
  return j;
}

Json cmd_classify_perfect(const JobSpec& job) {
  const RingTower t = io::load_tower(job.inputs[0]);
  Json j = header(job);
  j["tower"] = Json{{"name", t.name}, {"depth", t.depth()}};
  j["report"] = io::to_json(classify_perfect(t, job.depth, job.seed));
  return j;
}

Json cmd_lift(const JobSpec& job) {
  const io::LiftingJob l = io::lifting_from_json(load(job.inputs[0]), dir_of(job.inputs[0]));
  const IdealTower h = topological_jacobson_radical(l.tower).radical;
  Json j = header(job);
  j["tower"] = Json{{"name", l.tower.name}, {"depth", l.tower.depth()}};
  j["radical"] = io::to_json(h.levels.back());
  if (l.from_quotient) {
    j["mode"] = "from-quotient";
    j["lift"] = io::to_json(lift_from_quotient(l.tower, h, l.elements, false, job.seed));
  } else if (l.orthogonalize) {
    j["mode"] = "orthogonalize";
    j["lift"] = io::to_json(orthogonalize_tower(l.tower, h, l.elements, l.side));
  } else if (l.elements.size() == 1) {
    j["mode"] = "single";
    j["lift"] = io::to_json(lift_idempotent_tower(l.tower, h, l.elements[0]));
  } else {
    j["mode"] = "family";
    const TowerFamily fam = lift_orthogonal_family_tower(l.tower, h, l.elements, l.side);
    j["lift"] = io::to_json(fam);
    for (std::size_t n = 0; n < l.tower.depth(); ++n) {
      if (auto err = check_complete_orthogonal(l.tower.levels[n], fam.levels[n])) throw Inconsistent("level " + std::to_string(n) + ": " + *err);
    }
  }
  return j;
}

Json cmd_matmul(const JobSpec& job) {
  if (job.inputs.size() != 2) throw CLI::ValidationError("matmul", "needs two windowed matrices");
  WindowedMatrix a = io::windowed_from_json(load(job.inputs[0]), dir_of(job.inputs[0]));
  WindowedMatrix b = io::windowed_from_json(load(job.inputs[1]), dir_of(job.inputs[1]));
  const WindowedMatrix p = mat_mul(a, b);
  std::size_t determined = 0, known = 0;
  for (std::size_t x = 0; x < p.window; ++x) {
    known += p.known[x] ? 1 : 0;
    determined += p.row_determined(x) ? 1 : 0;
  }
  Json j = header(job);
  j["product"] = io::to_json(p);
  j["rows_known"] = known;
  j["rows_determined"] = determined;
  if (auto err = validate_windowed(p)) throw Inconsistent("product fails validation: " + *err);
  return j;
}

Json cmd_transport(const JobSpec& job) {
  const FiniteModule n = io::load_module(job.inputs[0]);
  Json j = header(job);
  j["Y"] = job.y;
  if (job.contra) {
    const FiniteModule c = n.side() == Side::Left ? n : throw io::ValidationError("contra transport needs a left module");
    const FiniteModule v = transport_contra(c, job.y);
    j["transported"] = io::to_json(v);
    bool corners = true;
    for (std::size_t x = 0; x < job.y; ++x) corners = corners && contra_corner(v, c.algebra(), job.y, x).action() == c.action();
    j["corners_recover_module"] = corners;
    if (!corners) throw Inconsistent("a corner of the transported module differs from the module");
  } else {
    const FiniteModule m = as_right(n);
    const FiniteModule v = transport_discrete(m, job.y);
    j["transported"] = io::to_json(v);
    const std::size_t e0 = hom_space(m, m).size(), e1 = hom_space(v, v).size();
    j["endomorphism_dims"] = Json::array({e0, e1});
    if (e0 != e1) throw Inconsistent("transport is not fully faithful on End(N)");
  }
  return j;
}

Json cmd_contratensor(const JobSpec& job) {
  const FiniteModule n = io::load_module(job.inputs[0]);
  Json j = header(job);
  j["X"] = job.y;
  const ContratensorResult c = contratensor(n, job.y);
  j["result"] = io::to_json(c);
  if (!c.verified) throw Inconsistent("contratensor product is not isomorphic to N[X]");
  return j;
}

Json cmd_bass(const JobSpec& job) {
  const io::BassJob b = io::bass_from_json(load(job.inputs[0]), dir_of(job.inputs[0]));
  Json j = header(job);
  const BassFlatDatum d = b.sample ? bass_flat_sample(b.ring, job.seed) : bass_flat(b.ring, b.prefix, b.period);
  j["ring"] = algebra_summary(b.ring);
  j["sampled"] = b.sample;
  j["result"] = io::to_json(d);
  if (!d.projective) throw Inconsistent("Bass flat over a finite ring is not projective");
  return j;
}

Json cmd_split(const JobSpec& job) {
  const OmegaSystem s = io::omega_from_json(load(job.inputs[0]), dir_of(job.inputs[0]));
  Json j = header(job);
  j["result"] = io::to_json(split_omega_limit_check(s, job.depth));
  return j;
}

Json cmd_coperfect(const JobSpec& job) {
  const FiniteModule m = io::load_module(job.inputs[0]);
  Json j = header(job);
  j["result"] = io::to_json(coperfect_witness_search(m, job.depth));
  return j;
}

Json cmd_bridge(const JobSpec& job) {
  const Json in = load(job.inputs[0]);
  Json j = header(job);
  BridgeReport r;
  if (io::format_of(in) == "toporing.family") {
    r = perfectness_bridge(io::family_from_json(in, dir_of(job.inputs[0])), job.depth, job.seed);
  } else {
    r = perfectness_bridge(io::module_from_json(in, dir_of(job.inputs[0])), job.depth, job.seed);
  }
  j["result"] = io::to_json(r);
  if (!r.consistent) j["inconsistent"] = true;
  return j;
}

void emit(const JobSpec& job, const Json& j) {
  const std::string text = io::canonical(j);
  if (job.out.empty()) {
    std::cout << text;
  } else {
    io::write_file(job.out, text);
  }
}

int run_verify(const JobSpec& job) {
  acceptance::SuiteContext ctx{job.data, job.seed};
  const auto all = acceptance::run_all(ctx);
  Json j = acceptance::combined_report(all, ctx);
  j["depth"] = job.depth;
  j["window"] = job.window;
  emit(job, j);
  bool ok = true, inconsistent = false;
  for (const auto& o : all) {
    std::cerr << acceptance::summary_line(o) << "\n";
    ok = ok && o.passed();
    inconsistent = inconsistent || o.inconsistency;
  }
  return inconsistent ? kExitInconsistent : ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite algebras, ring towers and matrix topologies"};
  app.require_subcommand(1);
  JobSpec job;
  const std::map<std::string, std::pair<std::string, std::function<Json(const JobSpec&)>>> commands = {
      {"radical", {"Jacobson radical of an algebra file", cmd_radical}},
      {"wedderburn", {"Wedderburn-Artin decomposition of the semisimple part", cmd_wedderburn}},
      {"decompose-module", {"Krull-Schmidt decomposition and perfect-decomposition verdict", cmd_decompose}},
      {"classify-tower", {"radical tower, T-nilpotency and semisimple classification", cmd_classify_tower}},
      {"classify-perfect", {"topological left perfectness report for a tower", cmd_classify_perfect}},
      {"lift-idempotents", {"lift idempotents modulo the topological radical", cmd_lift}},
      {"matmul", {"product of two windowed matrices", cmd_matmul}},
      {"transport", {"discrete (or --contra) transport to the matrix ring over a finite Y", cmd_transport}},
      {"contratensor", {"N (.) R[[X]] with its isomorphism to N[X]", cmd_contratensor}},
      {"bass-flat", {"colimit of a Bass sequence and its projectivity", cmd_bass}},
      {"split-limit", {"split check for an omega-indexed direct system", cmd_split}},
      {"coperfect", {"descending chains of cyclic submodules", cmd_coperfect}},
      {"bridge", {"perfect decompositions against Sigma-coperfectness of the End tower", cmd_bridge}},
  };
  std::map<std::string, CLI::App*> subs;
  auto common = [&job](CLI::App* s) {
    s->add_option("--depth", job.depth, "truncation depth (>= 1)")->check(CLI::PositiveNumber);
    s->add_option("--window", job.window, "window size for matrices")->check(CLI::PositiveNumber);
    s->add_option("--seed", job.seed, "seed recorded in the report");
    s->add_option("--out", job.out, "report file (default: standard output)");
  };
  for (const auto& [name, entry] : commands) {
    CLI::App* s = app.add_subcommand(name, entry.first);
    s->add_option("inputs", job.inputs, "input files")->required()->check(CLI::ExistingFile);
    common(s);
    if (name == "transport" || name == "contratensor") {
      s->add_option("--y", job.y, "size of the finite index set")->check(CLI::PositiveNumber);
    }
    if (name == "transport") s->add_flag("--contra", job.contra, "transport a left module to column vectors");
    subs[name] = s;
  }
  CLI::App* verify = app.add_subcommand("verify", "run acceptance criteria 1-10 on the bundled corpus");
  verify->add_option("--data", job.data, "corpus directory")->check(CLI::ExistingDirectory);
  common(verify);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }
  try {
    if (verify->parsed()) {
      job.subcommand = "verify";
      return run_verify(job);
    }
    for (const auto& [name, s] : subs) {
      if (!s->parsed()) continue;
      job.subcommand = name;
      Json report = commands.at(name).second(job);
      emit(job, report);
      if (report.contains("inconsistent")) {
        std::cerr << "error: inconsistent verdicts, see the report transcript\n";
        return kExitInconsistent;
      }
      return kExitOk;
    }
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitParse;
  } catch (const io::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Inconsistent& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::logic_error& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
