// modcard: command-line front end for the modular-cardinality library.
// Exit codes: 0 success, 1 negative answer (infeasible / check failed), 2 usage or input error, 3 cap exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "modcard/gadgets.hpp"
#include "modcard/gmc.hpp"
#include "modcard/graph_classes.hpp"
#include "modcard/modular_decomposition.hpp"
#include "modcard/serialize.hpp"
#include "modcard/solvers.hpp"
#include "modcard/tables.hpp"

using namespace modcard;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

// Writes the document to --output when given, otherwise to stdout.
void emit(const Json& j, const std::string& output) {
  if (output.empty())
    std::cout << j.dump() << '\n';
  else
    write_text(output, j.dump(2) + "\n");
}

BigInt parse_big(const std::string& s, const char* what) {
  BigInt v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument(std::string("bad integer for ") + what + ": '" + s + "'");
  return v;
}

BigRational parse_big_rational(const std::string& s) {
  Rational r = parse_rational(s);
  return BigRational(to_big(r.numerator()), to_big(r.denominator()));
}

struct Common {
  std::string input;
  std::string output;
  int cap = -1;  // -1: operation defaults
};

void add_io(CLI::App* cmd, Common& c, bool input_required = true) {
  auto* opt = cmd->add_option("--input,-i", c.input, "edge-list file");
  if (input_required) opt->required();
  cmd->add_option("--output,-o", c.output, "write the JSON result here instead of stdout");
}

TableCaps caps_of(int cap) {
  TableCaps caps;
  if (cap > 0) caps.deletion = caps.retention = cap;
  return caps;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modcard: modular cardinality, degree-domination solvers and hardness gadgets"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--cap", common.cap, "override brute-force size caps")->check(CLI::PositiveNumber);

  // decompose
  auto* decompose = app.add_subcommand("decompose", "modular decomposition tree and modular-width");
  add_io(decompose, common);

  // gmc
  std::string cls_name;
  auto* gmc = app.add_subcommand("gmc", "minimum class-modular partition");
  add_io(gmc, common);
  gmc->add_option("--class,-c", cls_name, "edgeless|clique|cluster|cograph")->required();

  auto* nd = app.add_subcommand("nd", "neighborhood diversity (twin classes)");
  add_io(nd, common);
  auto* itp = app.add_subcommand("itp", "iterated type partition");
  add_io(itp, common);

  // table
  std::string table_kind = "deletion";
  auto* table = app.add_subcommand("table", "degree deletion or retention table");
  add_io(table, common);
  table->add_option("--kind,-k", table_kind, "deletion|retention")->check(CLI::IsMember({"deletion", "retention"}));

  // compress
  std::string from_json;
  bool cluster_form = false;
  auto* compress = app.add_subcommand("compress", "piecewise-linear form of a deletion table");
  add_io(compress, common, false);
  compress->add_option("--from-json", from_json, "read a step table JSON instead of a graph");
  compress->add_flag("--cluster", cluster_form, "emit the convex ceiling form of a cluster graph");

  // solve-bdd
  long long q = 0, beta = 0;
  std::string form = "relaxed";
  auto* bdd = app.add_subcommand("solve-bdd", "bounded degree deletion through class-modular tables");
  add_io(bdd, common);
  bdd->add_option("--class,-c", cls_name, "module class, e.g. cluster or cluster+linear-forest")->required();
  bdd->add_option("--beta", beta, "beta <= 0; the degree bound is -beta")->required();
  bdd->add_option("--q", q, "deletion budget")->required();
  bdd->add_option("--cluster-form", form, "relaxed|ceiling|step")->check(CLI::IsMember({"relaxed", "ceiling", "step"}));

  // solve-ldd / oracle
  std::string alpha_s = "0";
  auto* ldd = app.add_subcommand("solve-ldd", "(alpha,beta)-linear degree domination via twin classes");
  add_io(ldd, common);
  auto* oracle = app.add_subcommand("oracle", "exhaustive (alpha,beta)-linear degree domination");
  add_io(oracle, common);
  for (auto* cmd : {ldd, oracle}) {
    cmd->add_option("--alpha", alpha_s, "rational p/q in [0,1]")->required();
    cmd->add_option("--beta", beta, "integer beta")->required();
    cmd->add_option("--q", q, "budget")->required();
  }

  // reduce
  std::string rcase, smc_path, witness_out, alpha01 = "1/2", beta01 = "0", r_s, s_s, babs_s, materialize_out, smc_out;
  int k = 0, n = 0;
  std::uint64_t seed = 1;
  std::string density = "1/2";
  long long mat_cap = kDefaultMaterializeCap;
  auto* reduce = app.add_subcommand("reduce", "build the hardness blueprint from a multicolored clique instance");
  reduce->add_option("--case", rcase, "alpha0|alpha01|alpha1")->required();
  reduce->add_option("--k", k, "colors (with --n for a planted random instance)");
  reduce->add_option("--n", n, "vertices per color");
  reduce->add_option("--seed", seed, "random seed for the planted instance");
  reduce->add_option("--density", density, "edge density of the random host graph (p/q)");
  reduce->add_option("--smc", smc_path, "read the instance from an SMC file instead");
  reduce->add_option("--smc-out", smc_out, "write the instance in SMC format");
  reduce->add_option("--alpha", alpha01, "alpha for the alpha01 case");
  reduce->add_option("--beta", beta01, "beta for the alpha01 case");
  reduce->add_option("--r", r_s, "override r (scaled blueprint)");
  reduce->add_option("--s", s_s, "override s (scaled blueprint)");
  reduce->add_option("--beta-abs", babs_s, "override |beta| (scaled blueprint)");
  reduce->add_option("--out,-o", common.output, "blueprint JSON path (stdout when absent)");
  reduce->add_option("--witness-out", witness_out, "write the per-factor witness of a multicolored clique");
  reduce->add_option("--materialize", materialize_out, "write the concrete graph as an edge list");
  reduce->add_option("--materialize-cap", mat_cap, "vertex cap for --materialize");

  // check-witness
  std::string bp_path, w_path;
  auto* check = app.add_subcommand("check-witness", "verify a per-factor witness against a blueprint");
  check->add_option("blueprint", bp_path, "blueprint JSON")->required();
  check->add_option("witness", w_path, "witness JSON")->required();

  // verify-gadget
  std::string triple_path;
  long long p_arg = -1, l_arg = 1;
  auto* gadget = app.add_subcommand("verify-gadget", "build or check a degree deletion/retention star graph");
  gadget->add_option("--triple", triple_path, "triple JSON")->required();
  gadget->add_option("--input,-i", common.input, "graph to verify (default: build the star construction)");
  gadget->add_option("--p", p_arg, "retention threshold p (with --input)");
  gadget->add_option("--l", l_arg, "retention threshold l (with --input)");
  gadget->add_option("--output,-o", common.output, "write the JSON result here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*decompose) {
      Graph g = read_edge_list_file(common.input);
      MDTree t = md_tree(g);
      Json out = to_json(t);
      if (g.n() >= 2) out["maximal_partition"] = to_json(maximal_modular_partition(g));
      emit(out, common.output);
      return kOk;
    }
    if (*gmc) {
      Graph g = read_edge_list_file(common.input);
      emit(to_json(compute_gmc(parse_graph_class(cls_name), g)), common.output);
      return kOk;
    }
    if (*nd) {
      emit(to_json(neighborhood_diversity(read_edge_list_file(common.input))), common.output);
      return kOk;
    }
    if (*itp) {
      emit(Json{{"itp", iterated_type_partition(read_edge_list_file(common.input))}}, common.output);
      return kOk;
    }
    if (*table) {
      Graph g = read_edge_list_file(common.input);
      StepTable t = table_kind == "deletion" ? deletion_table(g, caps_of(common.cap)) : retention_table(g, caps_of(common.cap));
      emit(to_json(t), common.output);
      return kOk;
    }
    if (*compress) {
      if (from_json.empty() == common.input.empty())
        throw std::invalid_argument("compress needs exactly one of --input or --from-json");
      PiecewiseLinearFn f;
      if (!from_json.empty()) {
        StepTable t = step_table_from_json(read_json_file(from_json));
        if (t.kind != TableKind::Deletion) throw std::invalid_argument("only deletion tables compress");
        f = compress_step_table(t);
      } else {
        Graph g = read_edge_list_file(common.input);
        f = cluster_form ? cluster_piecewise(g) : compress_step_table(deletion_table(g, caps_of(common.cap)));
      }
      Json out = to_json(f);
      out["segments"] = f.segment_count();
      emit(out, common.output);
      return kOk;
    }
    if (*bdd) {
      Graph g = read_edge_list_file(common.input);
      BddOptions opts;
      opts.caps = caps_of(common.cap);
      opts.cluster_form = form == "relaxed"   ? ClusterTableForm::RelaxedConvex
                          : form == "ceiling" ? ClusterTableForm::Ceiling
                                              : ClusterTableForm::StepCompressed;
      SolveResult r = solve_bdd_gmc(g, q, beta, parse_graph_class(cls_name), opts);
      emit(to_json(r), common.output);
      return r.feasible() ? kOk : kNegative;
    }
    if (*ldd || *oracle) {
      LddInstance inst{read_edge_list_file(common.input), parse_rational(alpha_s), beta, q};
      SolveResult r;
      if (*ldd) {
        NdOptions opts;
        if (common.cap > 0) opts.nd_cap = common.cap;
        r = solve_ldd_nd(inst, opts);
      } else {
        r.witness = brute_force_ldd(inst, common.cap > 0 ? common.cap : 20);
      }
      emit(to_json(r), common.output);
      return r.feasible() ? kOk : kNegative;
    }
    if (*reduce) {
      ReductionCase c = parse_reduction_case(rcase);
      SmcInstance smc;
      if (!smc_path.empty()) {
        std::ifstream in(smc_path);
        if (!in) throw std::invalid_argument("cannot open " + smc_path);
        smc = read_smc(in);
      } else {
        if (k < 2 || n < k) throw std::invalid_argument("reduce needs --smc or --k/--n with n >= k >= 2");
        smc = smc_from_clique(k, n, parse_rational(density), seed);
      }
      if (!smc_out.empty()) {
        std::ostringstream os;
        write_smc(os, smc);
        write_text(smc_out, os.str());
      }
      ReductionOverrides ov;
      if (!r_s.empty()) ov.r = parse_big(r_s, "--r");
      if (!s_s.empty()) ov.s = parse_big(s_s, "--s");
      if (!babs_s.empty()) ov.beta_abs = parse_big(babs_s, "--beta-abs");
      ReductionBlueprint bp = build_reduction(smc, c, parse_big_rational(alpha01), parse_big(beta01, "--beta"), ov);
      if (common.output.empty()) {
        std::cout << to_json(bp).dump() << '\n';
      } else {
        write_text(common.output, to_json(bp).dump() + "\n");
        // Padding constants make q enormous; the summary only spells it out when it is short.
        const std::string qs = bp.scalar("q").get_str();
        Json summary = {{"case", to_string(bp.rcase)},
                        {"factor_count", bp.factors.size()},
                        {"q_digits", qs.size()},
                        {"scaled", bp.scaled}};
        if (qs.size() <= 64) summary["q"] = qs;
        std::cout << summary.dump() << '\n';
      }
      if (!materialize_out.empty()) {
        MaterializedReduction m = materialize(bp, mat_cap);
        std::ostringstream os;
        write_edge_list(os, m.graph);
        write_text(materialize_out, os.str());
      }
      if (!witness_out.empty()) {
        auto clique = find_multicolored_clique(smc);
        if (!clique) {
          std::cerr << "modcard: instance has no multicolored clique; no witness written\n";
          return kNegative;
        }
        write_text(witness_out, to_json(bp, witness_from_clique(bp, *clique)).dump(2) + "\n");
      }
      return kOk;
    }
    if (*check) {
      ReductionBlueprint bp = blueprint_from_json(read_json_file(bp_path));
      ReductionWitness w = witness_from_json(bp, read_json_file(w_path));
      WitnessCheck res = check_witness(bp, w);
      std::cout << to_json(res).dump() << '\n';
      return res.ok ? kOk : kNegative;
    }
    if (*gadget) {
      ValidTriple t = triple_from_json(read_json_file(triple_path));
      t.validate();
      const bool deletion = t.direction == TripleDirection::Decreasing;
      Graph g;
      long long p = p_arg, l = l_arg;
      if (!common.input.empty()) {
        g = read_edge_list_file(common.input);
        if (!deletion && p < 0) throw std::invalid_argument("retention verification of --input needs --p");
      } else if (deletion) {
        g = deletion_star_graph(t, mat_cap);
      } else {
        RetentionGraph rg = retention_star_graph(t, mat_cap);
        g = rg.graph;
        p = rg.p;
        l = rg.l;
      }
      bool ok = deletion ? verify_deletion_graph(g, t) : verify_retention_graph(g, t, p, l);
      Json out = {{"kind", deletion ? "deletion" : "retention"}, {"vertices", g.n()}, {"valid", ok}};
      if (!deletion) {
        out["p"] = p;
        out["l"] = l;
      }
      emit(out, common.output);
      return ok ? kOk : kNegative;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "modcard: " << e.what() << '\n';
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "modcard: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
