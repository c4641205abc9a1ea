#include "cli.hpp"

#include "gkz/errors.hpp"
#include "gkz/json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gkz::cli {

namespace {

using io::Json;

struct Options {
  std::string config_path;
  std::string matrix_path;
  std::string expr_path;
  long degree_bound = 12;
  long window = 8;
  std::uint64_t seed = 1;
  std::size_t budget = 1000000;
  std::size_t samples = 2000;
  std::string format = "json";
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return io::parse(ss.str());
}

Json valuation_json(const ValuationReport& r) {
  Json j{{"value", io::to_json(r.value)}};
  if (r.witness) j["witness"] = io::to_json(*r.witness);
  if (r.alpha) j["alpha"] = *r.alpha;
  if (r.cell) j["cell"] = *r.cell;
  return j;
}

bool is_flat(const Json& j) {
  return !j.is_structured() || (j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); }));
}

std::string text_of(const Json& j, int indent = 0) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  std::string out;
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      out += is_flat(*it) ? pad + it.key() + ": " + it->dump() + "\n" : pad + it.key() + ":\n" + text_of(*it, indent + 2);
  } else if (j.is_array()) {
    for (const auto& x : j) out += is_flat(x) ? pad + "- " + x.dump() + "\n" : pad + "-\n" + text_of(x, indent + 2);
  } else {
    out += pad + j.dump() + "\n";
  }
  return out;
}

void emit(std::ostream& out, const Options& opt, const Json& j, const PointConfig* cfg = nullptr,
          const MarkedSubdivision* s = nullptr) {
  if (opt.format == "svg") {
    if (!cfg || !s) throw SchemaError("svg output is only available for subdivide");
    out << (cfg->dim() > 2 ? face_lattice_text(*cfg, *s) : render_svg(*cfg, *s));
  } else if (opt.format == "text") {
    out << text_of(j);
  } else {
    out << j.dump(2) << "\n";
  }
}

int cmd_subdivide(const Options& opt, std::ostream& out) {
  Json cj = read_json(opt.config_path);
  PointConfig cfg = io::config_from_json(cj);
  WeightMatrix psi = io::matrix_psi_from_json(read_json(opt.matrix_path));
  MarkedSubdivision s = subdivide(cfg, psi);
  ConditionCone cc = condition_cone(cfg, s);
  ClosedMembership cm = closed_member(cc, psi);
  Json j{{"subdivision", io::to_json(cfg, s)},
         {"triangulation", is_triangulation(cfg, s)},
         {"closed_member", cm.member},
         {"closed_signs", cm.signs},
         {"open_member", open_member_by_signs(cc, psi)},
         {"condition_cone", io::to_json(cc.cone)},
         {"cone_dim", cone_dim(cfg, s, psi.rows())}};
  if (auto given = io::subdivision_from_json(cj)) j["matches_input_cells"] = (*given == s);
  emit(out, opt, j, &cfg, &s);
  return kOk;
}

int cmd_fan(const Options& opt, std::ostream& out) {
  PointConfig cfg = io::config_from_json(read_json(opt.config_path));
  auto subs = enumerate_regular_subdivisions(cfg, opt.budget);
  Json list = Json::array();
  for (const auto& s : subs) {
    ConditionCone cc = condition_cone(cfg, s);
    list.push_back({{"cells", io::cells_to_json(s)},
                    {"triangulation", is_triangulation(cfg, s)},
                    {"condition_cone", io::to_json(cc.cone)},
                    {"cone_dim_N1", cone_dim(cfg, s, 1)}});
  }
  Json order = Json::array();
  for (std::size_t a = 0; a < subs.size(); ++a)
    for (std::size_t b = 0; b < subs.size(); ++b)
      if (a != b && refines(cfg, subs[a], subs[b])) order.push_back({a, b});
  auto sampled = sample_regular_subdivisions(cfg, opt.samples, opt.seed);
  bool consistent = std::all_of(sampled.begin(), sampled.end(),
                                [&](const MarkedSubdivision& s) { return std::find(subs.begin(), subs.end(), s) != subs.end(); });
  Json j{{"count", subs.size()},
         {"subdivisions", list},
         {"refines", order},
         {"sampling", {{"samples", opt.samples}, {"seed", opt.seed}, {"distinct", sampled.size()}, {"consistent", consistent}}}};
  emit(out, opt, j);
  return kOk;
}

int cmd_valuate(const Options& opt, std::ostream& out) {
  PointConfig cfg = io::config_from_json(read_json(opt.config_path));
  WeightMatrix psi = io::matrix_psi_from_json(read_json(opt.matrix_path));
  Expr f = io::expr_from_json(read_json(opt.expr_path), cfg.dim());
  QuasiValuation qv(cfg, psi, opt.degree_bound);
  ValuationReport v = qv.v_quasi(f);
  ValuationReport nu = qv.nu_quasi(f);
  Json j{{"V", valuation_json(v)}, {"nu", valuation_json(nu)}, {"delta", io::to_json(qv.delta(f))}};
  if (!f.empty() && !psi.is_zero()) j["elementary"] = is_elementary(qv, f);
  emit(out, opt, j);
  return kOk;
}

int cmd_liminf(const Options& opt, std::ostream& out) {
  PointConfig cfg = io::config_from_json(read_json(opt.config_path));
  WeightMatrix psi = io::matrix_psi_from_json(read_json(opt.matrix_path));
  Expr f = io::expr_from_json(read_json(opt.expr_path), cfg.dim());
  QuasiValuation qv(cfg, psi, opt.degree_bound);
  PowerSeq seq = power_seq(qv, f, opt.window);
  Accumulation acc = windowed_accumulation(seq.nu);
  Json terms = Json::array();
  for (std::size_t l = 0; l < seq.nu.size(); ++l)
    terms.push_back({{"l", l + 1}, {"nu", io::to_json(seq.nu[l])}, {"normalized", io::to_json(seq.normalized[l])}});
  Json pts = Json::array();
  for (const auto& p : acc.points) pts.push_back(io::to_json(p));
  Json j{{"sequence", terms},
         {"accumulation", pts},
         {"liminf", io::to_json(acc.liminf)},
         {"period", acc.period},
         {"resolved", acc.resolved},
         {"flag", acc.flag}};
  emit(out, opt, j);
  return kOk;
}

int cmd_degenerate(const Options& opt, std::ostream& out) {
  PointConfig cfg = io::config_from_json(read_json(opt.config_path));
  WeightMatrix psi = io::matrix_psi_from_json(read_json(opt.matrix_path));
  QuasiValuation qv(cfg, psi, opt.degree_bound);
  const MarkedSubdivision& s = qv.subdivision();
  const long D = opt.degree_bound;
  GrVPresentation gv = gr_v_present(cfg, s, D);
  GrNuPresentation gn = gr_nu_reduced(cfg, s, D);
  Json witnesses = Json::array();
  for (const auto& w : gv.prime_witnesses) witnesses.push_back(io::to_json(w));
  Json nil = Json::array();
  for (const auto& n : gn.nilpotents)
    nil.push_back({{"u", io::to_json(n.u)}, {"exponent", n.exponent}, {"cell", n.cell}});
  KhovanskiiReport kr = khovanskii_report(cfg, s, D);
  Json extra = Json::array();
  for (const auto& cell : kr.extra_generators) {
    Json e = Json::array();
    for (const auto& u : cell) e.push_back(io::to_json(u));
    extra.push_back(e);
  }
  FullRankReport fr = is_full_rank(qv, D);
  Json full{{"full_rank", fr.full_rank}};
  if (fr.collision) full["collision"] = {io::to_json(fr.collision->first), io::to_json(fr.collision->second)};
  Json j{{"subdivision", io::cells_to_json(s)},
         {"gr_V",
          {{"basis_size", gv.basis.size()},
           {"prime_witnesses", witnesses},
           {"annihilators_verified", gv.annihilators_verified},
           {"irredundant", gv.irredundant},
           {"intersection_zero", gv.intersection_zero},
           {"nilpotent_free", gv.nilpotent_free},
           {"equidimensional", gv.equidimensional}}},
         {"gr_nu_reduced", {{"basis_size", gn.basis.size()}, {"nilpotents", nil}}},
         {"khovanskii", {{"degree_one_suffices", kr.degree_one_suffices}, {"extra_generators", extra}}},
         {"injectivity", full}};
  j["stanley_reisner"] = is_triangulation(cfg, s) ? io::to_json(stanley_reisner(cfg, s)) : Json(nullptr);
  emit(out, opt, j);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact GKZ fans, lexicographic quasi-valuations and toric degenerations"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub, bool matrix, bool expr) {
    sub->add_option("--config", opt.config_path, "point configuration JSON")->required();
    if (matrix) sub->add_option("--matrix", opt.matrix_path, "weight matrix JSON")->required();
    if (expr) sub->add_option("--expr", opt.expr_path, "expression JSON")->required();
    sub->add_option("--degree-bound", opt.degree_bound, "largest degree examined")->check(CLI::PositiveNumber);
    sub->add_option("--window", opt.window, "number of powers examined")->check(CLI::PositiveNumber);
    sub->add_option("--seed", opt.seed, "random seed");
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text", "svg"}));
  };
  auto* sub_subdivide = app.add_subcommand("subdivide", "marked subdivision induced by a weight matrix");
  common(sub_subdivide, true, false);
  auto* sub_fan = app.add_subcommand("fan", "regular subdivisions and their condition cones");
  common(sub_fan, false, false);
  sub_fan->add_option("--budget", opt.budget, "search node budget");
  sub_fan->add_option("--samples", opt.samples, "random heights for the cross-check");
  auto* sub_valuate = app.add_subcommand("valuate", "V, nu and delta of an expression");
  common(sub_valuate, true, true);
  auto* sub_liminf = app.add_subcommand("liminf", "nu(f^l)/l and its windowed accumulation set");
  common(sub_liminf, true, true);
  auto* sub_degenerate = app.add_subcommand("degenerate", "associated graded algebras and certificates");
  common(sub_degenerate, true, false);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kSchema;
  }

  try {
    if (opt.format == "svg" && !sub_subdivide->parsed()) throw SchemaError("svg output is only available for subdivide");
    if (sub_subdivide->parsed()) return cmd_subdivide(opt, out);
    if (sub_fan->parsed()) return cmd_fan(opt, out);
    if (sub_valuate->parsed()) return cmd_valuate(opt, out);
    if (sub_liminf->parsed()) return cmd_liminf(opt, out);
    if (sub_degenerate->parsed()) return cmd_degenerate(opt, out);
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kSchema;
  } catch (const DimensionMismatch& e) {
    err << "dimension mismatch: " << e.what() << "\n";
    return kDimension;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const DegreeBoundExceeded& e) {
    err << "degree bound exceeded: " << e.what() << "\n";
    return kDegree;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kSchema;
  } catch (const nlohmann::json::exception& e) {
    err << "schema error: " << e.what() << "\n";
    return kSchema;
  }
  return kSchema;
}

}  // namespace gkz::cli
