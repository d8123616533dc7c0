#include "modcard/serialize.hpp"

#include <functional>
#include <stdexcept>

namespace modcard {

namespace {

std::string big(const BigInt& v) { return v.get_str(); }

BigInt big_from(const Json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
  BigInt v;
  if (!j.is_string() || v.set_str(j.get<std::string>(), 10) != 0)
    throw std::invalid_argument("expected a decimal integer string, got " + j.dump());
  return v;
}

BigRational bigq_from(const Json& j) {
  BigRational v;
  if (!j.is_string() || v.set_str(j.get<std::string>(), 10) != 0)
    throw std::invalid_argument("expected a rational string, got " + j.dump());
  v.canonicalize();
  return v;
}

Json big_list(const std::vector<BigInt>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(big(x));
  return out;
}

std::vector<BigInt> big_list_from(const Json& j) {
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(big_from(x));
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const ModularPartition& p) {
  Json blocks = Json::array();
  for (const auto& b : p.blocks) blocks.push_back(b.members());
  return {{"host_n", p.host_n}, {"blocks", blocks}};
}

ModularPartition partition_from_json(const Json& j) {
  ModularPartition p;
  p.host_n = field(j, "host_n").get<int>();
  for (const auto& b : field(j, "blocks")) {
    auto members = b.get<std::vector<Vertex>>();
    for (Vertex v : members)
      if (v < 0 || v >= p.host_n) throw std::invalid_argument("partition vertex out of range");
    p.blocks.emplace_back(p.host_n, members);
  }
  return p;
}

Json to_json(const MDTree& t) {
  std::function<Json(int)> node = [&](int i) {
    const MDNode& nd = t.nodes[i];
    Json out = {{"kind", to_string(nd.kind)}, {"vertices", nd.vertices}};
    if (!nd.children.empty()) {
      Json kids = Json::array();
      for (int c : nd.children) kids.push_back(node(c));
      out["children"] = kids;
    }
    return out;
  };
  Json out = {{"modular_width", modular_width(t)}};
  out["root"] = t.nodes.empty() ? Json(nullptr) : node(0);
  return out;
}

Json to_json(const StepTable& t) {
  return {{"kind", t.kind == TableKind::Deletion ? "deletion" : "retention"},
          {"host_size", t.host_size},
          {"values", t.values}};
}

StepTable step_table_from_json(const Json& j) {
  StepTable t;
  const auto kind = field(j, "kind").get<std::string>();
  if (kind != "deletion" && kind != "retention") throw std::invalid_argument("unknown table kind '" + kind + "'");
  t.kind = kind == "deletion" ? TableKind::Deletion : TableKind::Retention;
  t.values = field(j, "values").get<std::vector<int>>();
  t.host_size = j.contains("host_size") ? j.at("host_size").get<int>()
                                         : static_cast<int>(t.values.size()) - (t.kind == TableKind::Deletion ? 1 : 0);
  return t;
}

Json to_json(const PiecewiseLinearFn& f) {
  auto frac = [](const Rational& r) { return Json::array({r.numerator(), r.denominator()}); };
  Json bps = Json::array();
  for (const auto& b : f.breakpoints)
    bps.push_back({b.x.numerator(), b.x.denominator(), b.y.numerator(), b.y.denominator()});
  return {{"mode", f.mode == EvalMode::Exact ? "exact" : "ceiling"},
          {"convex", f.convex},
          {"breakpoints", bps},
          {"left_slope", frac(f.left_slope)},
          {"right_slope", frac(f.right_slope)}};
}

namespace {

Rational rational_from(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator in piecewise JSON");
  return Rational(num, den);
}

Rational slope_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("slope must be [num, den]");
  return rational_from(j[0].get<long long>(), j[1].get<long long>());
}

}  // namespace

PiecewiseLinearFn piecewise_from_json(const Json& j) {
  PiecewiseLinearFn f;
  for (const auto& b : field(j, "breakpoints")) {
    if (!b.is_array() || b.size() != 4) throw std::invalid_argument("breakpoint must be [xn, xd, yn, yd]");
    f.breakpoints.push_back({rational_from(b[0].get<long long>(), b[1].get<long long>()),
                             rational_from(b[2].get<long long>(), b[3].get<long long>())});
  }
  for (std::size_t i = 1; i < f.breakpoints.size(); ++i)
    if (!(f.breakpoints[i - 1].x < f.breakpoints[i].x)) throw std::invalid_argument("breakpoints must have increasing x");
  f.left_slope = j.contains("left_slope") ? slope_from(j.at("left_slope")) : Rational(0);
  f.right_slope = j.contains("right_slope") ? slope_from(j.at("right_slope")) : Rational(0);
  const auto mode = j.value("mode", std::string("exact"));
  if (mode != "exact" && mode != "ceiling") throw std::invalid_argument("unknown evaluation mode '" + mode + "'");
  f.mode = mode == "exact" ? EvalMode::Exact : EvalMode::Ceiling;
  f.convex = j.value("convex", false);
  return f;
}

Json to_json(const GmcResult& r) {
  Json out = to_json(r.partition);
  out["class"] = r.cls.name();
  out["cardinality"] = r.cardinality;
  return out;
}

Json to_json(const SolveResult& r) {
  Json out = {{"feasible", r.feasible()}, {"branches_explored", r.branches_explored}};
  if (r.witness) {
    out["size"] = r.witness->size();
    out["witness"] = r.witness->members();
  }
  return out;
}

Json to_json(const ValidTriple& t) {
  return {{"direction", t.direction == TripleDirection::Decreasing ? "decreasing" : "increasing"},
          {"a0", big(t.a0)},
          {"c0", big(t.c0)},
          {"I", big_list(t.I)},
          {"cost", big_list(t.cost)}};
}

ValidTriple triple_from_json(const Json& j) {
  ValidTriple t;
  const auto dir = field(j, "direction").get<std::string>();
  if (dir != "decreasing" && dir != "increasing") throw std::invalid_argument("unknown triple direction '" + dir + "'");
  t.direction = dir == "decreasing" ? TripleDirection::Decreasing : TripleDirection::Increasing;
  t.a0 = big_from(field(j, "a0"));
  t.c0 = big_from(field(j, "c0"));
  t.I = big_list_from(field(j, "I"));
  t.cost = big_list_from(field(j, "cost"));
  return t;
}

Json to_json(const ReductionBlueprint& bp) {
  Json scalars = Json::object();
  for (const auto& [k, v] : bp.scalars) scalars[k] = big(v);
  Json pairs = Json::array();
  for (const auto& [ij, sums] : bp.pair_sums) pairs.push_back({{"i", ij.first}, {"j", ij.second}, {"sums", big_list(sums)}});
  Json factors = Json::array();
  for (const auto& f : bp.factors) {
    Json jf = {{"name", f.name}, {"role", f.role}, {"i", f.i},
               {"j", f.j},       {"kind", to_string(f.kind)}, {"size", big(f.size)}};
    if (f.triple) jf["triple"] = to_json(*f.triple);
    if (f.kind == FactorKind::RetentionStars) {
      jf["pad"] = big(f.pad);
      jf["p"] = big(f.p);
      jf["l"] = big(f.l);
    }
    factors.push_back(jf);
  }
  Json adjacency = Json::array();
  for (auto [a, b] : bp.adjacency) adjacency.push_back({bp.factors[a].name, bp.factors[b].name});
  return {{"case", to_string(bp.rcase)},
          {"alpha", bp.alpha.get_str()},
          {"k", bp.k},
          {"n", bp.n},
          {"scaled", bp.scaled},
          {"factor_count", bp.factors.size()},
          {"scalars", scalars},
          {"I", big_list(bp.I)},
          {"pair_sums", pairs},
          {"factors", factors},
          {"adjacency", adjacency}};
}

ReductionBlueprint blueprint_from_json(const Json& j) {
  ReductionBlueprint bp;
  bp.rcase = parse_reduction_case(field(j, "case").get<std::string>());
  bp.alpha = bigq_from(field(j, "alpha"));
  bp.k = field(j, "k").get<int>();
  bp.n = field(j, "n").get<int>();
  bp.scaled = j.value("scaled", false);
  for (const auto& [k, v] : field(j, "scalars").items()) bp.scalars[k] = big_from(v);
  bp.I = big_list_from(field(j, "I"));
  for (const auto& p : field(j, "pair_sums"))
    bp.pair_sums[{field(p, "i").get<int>(), field(p, "j").get<int>()}] = big_list_from(field(p, "sums"));
  for (const auto& jf : field(j, "factors")) {
    Factor f;
    f.name = field(jf, "name").get<std::string>();
    f.role = field(jf, "role").get<std::string>();
    f.i = jf.value("i", 0);
    f.j = jf.value("j", 0);
    const auto kind = field(jf, "kind").get<std::string>();
    if (kind == "edgeless") f.kind = FactorKind::Edgeless;
    else if (kind == "deletion-stars") f.kind = FactorKind::DeletionStars;
    else if (kind == "retention-stars") f.kind = FactorKind::RetentionStars;
    else throw std::invalid_argument("unknown factor kind '" + kind + "'");
    f.size = big_from(field(jf, "size"));
    if (jf.contains("triple")) f.triple = triple_from_json(jf.at("triple"));
    if (f.kind != FactorKind::Edgeless && !f.triple) throw std::invalid_argument("factor " + f.name + " needs a triple");
    if (jf.contains("pad")) f.pad = big_from(jf.at("pad"));
    if (jf.contains("p")) f.p = big_from(jf.at("p"));
    if (jf.contains("l")) f.l = big_from(jf.at("l"));
    bp.factors.push_back(std::move(f));
  }
  for (const auto& e : field(j, "adjacency")) {
    int a = bp.factor_index(e.at(0).get<std::string>()), b = bp.factor_index(e.at(1).get<std::string>());
    if (a < 0 || b < 0) throw std::invalid_argument("adjacency names an unknown factor: " + e.dump());
    bp.adjacency.emplace_back(std::min(a, b), std::max(a, b));
  }
  for (const char* key : {"beta", "q", "s", "l"})
    if (!bp.scalars.count(key)) throw std::invalid_argument(std::string("blueprint lacks scalar '") + key + "'");
  return bp;
}

Json to_json(const ReductionBlueprint& bp, const ReductionWitness& w) {
  Json rows = Json::array();
  for (std::size_t f = 0; f < bp.factors.size(); ++f)
    rows.push_back({{"factor", bp.factors[f].name}, {"chi", big(w.chi[f])}, {"degree", big(w.degree[f])}});
  BigInt total = 0;
  for (const auto& c : w.chi) total += c;
  return {{"total", big(total)}, {"counts", rows}};
}

ReductionWitness witness_from_json(const ReductionBlueprint& bp, const Json& j) {
  ReductionWitness w;
  w.chi.assign(bp.factors.size(), 0);
  w.degree.assign(bp.factors.size(), 0);
  std::vector<bool> seen(bp.factors.size(), false);
  for (const auto& row : field(j, "counts")) {
    int f = bp.factor_index(field(row, "factor").get<std::string>());
    if (f < 0) throw std::invalid_argument("witness names an unknown factor: " + row.dump());
    w.chi[f] = big_from(field(row, "chi"));
    w.degree[f] = row.contains("degree") ? big_from(row.at("degree")) : BigInt(0);
    seen[f] = true;
  }
  for (std::size_t f = 0; f < seen.size(); ++f)
    if (!seen[f]) throw std::invalid_argument("witness lacks factor " + bp.factors[f].name);
  return w;
}

Json to_json(const WitnessCheck& c) { return {{"ok", c.ok}, {"total", big(c.total)}, {"failures", c.failures}}; }

}  // namespace modcard
