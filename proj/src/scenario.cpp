#include "idem/scenario.hpp"

#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "idem/commutation.hpp"
#include "idem/dynamics.hpp"
#include "idem/error.hpp"
#include "idem/lie.hpp"
#include "idem/measure_groups.hpp"
#include "idem/suite.hpp"

namespace idem {

const char* to_string(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::Parse: return "parse";
    case ErrorCategory::Schema: return "schema";
    case ErrorCategory::Reference: return "reference";
    case ErrorCategory::Precondition: return "precondition";
    case ErrorCategory::Internal: return "internal";
  }
  return "?";
}

int exit_code(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::Parse: return 2;
    case ErrorCategory::Schema: return 3;
    case ErrorCategory::Reference: return 4;
    case ErrorCategory::Precondition: return 5;
    case ErrorCategory::Internal: return 6;
  }
  return 6;
}

json ScenarioError::to_json() const {
  return json{{"error", {{"category", idem::to_string(category_)}, {"field", field_}, {"message", what()}}}};
}

// --- serialization ----------------------------------------------------------

json to_json(const CycloScalar& z) {
  json coeffs = json::array();
  for (const auto& c : z.coefficients()) coeffs.push_back(c.get_str());
  const auto v = z.to_complex();
  return json{{"exact", z.to_string()}, {"conductor", z.conductor()}, {"coefficients", coeffs},
              {"approx", {v.real(), v.imag()}}};
}

json to_json(const Subgroup& k) {
  const GroupTable& g = k.group();
  json elems = json::array(), gens = json::array();
  for (Elem x : k.elements()) elems.push_back(g.label(x));
  for (Elem x : k.generators()) gens.push_back(g.label(x));
  return json{{"order", k.order()}, {"elements", elems}, {"generators", gens}};
}

json to_json(const Character& rho) {
  const GroupTable& g = rho.domain().group();
  json rot = json::object();
  for (Elem x : rho.domain().generators()) rot[g.label(x)] = rho.rotation(x).get_str();
  return json{{"trivial", rho.is_trivial()}, {"rotations", rot}};
}

json to_json(const Measure& mu) {
  const GroupTable& g = *mu.group();
  json terms = json::array();
  for (Elem x : support(mu)) {
    json t = to_json(mu[x]);
    t["element"] = g.label(x);
    terms.push_back(t);
  }
  return json{{"group", g.name()}, {"terms", terms}};
}

json to_json(const FloatMeasure& mu, const GroupTable& g) {
  json out = json::object();
  for (Elem x = 0; x < mu.size(); ++x) {
    if (std::abs(mu[x]) > 1e-12) out[g.label(x)] = {mu[x].real(), mu[x].imag()};
  }
  return out;
}

namespace {

[[noreturn]] void fail(ErrorCategory c, const std::string& field, const std::string& message) {
  throw ScenarioError(c, field, field + ": " + message);
}

const json& require(const json& obj, const std::string& key, const std::string& field) {
  if (!obj.is_object()) fail(ErrorCategory::Schema, field, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(ErrorCategory::Schema, field + "." + key, "missing required field");
  return *it;
}

std::string as_string(const json& j, const std::string& field) {
  if (!j.is_string()) fail(ErrorCategory::Schema, field, "expected a string");
  return j.get<std::string>();
}

unsigned as_unsigned(const json& j, const std::string& field) {
  if (!j.is_number_unsigned()) fail(ErrorCategory::Schema, field, "expected a non-negative integer");
  return j.get<unsigned>();
}

double as_double(const json& j, const std::string& field) {
  if (!j.is_number()) fail(ErrorCategory::Schema, field, "expected a number");
  return j.get<double>();
}

mpq_class as_rational(const json& j, const std::string& field) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (!j.is_string()) fail(ErrorCategory::Schema, field, "expected a rational such as \"1/2\"");
  static const std::regex pattern(R"(^-?\d+(/\d+)?$)");
  const std::string s = j.get<std::string>();
  if (!std::regex_match(s, pattern)) fail(ErrorCategory::Schema, field, "malformed rational '" + s + "'");
  mpq_class q(s);
  if (q.get_den() == 0) fail(ErrorCategory::Schema, field, "zero denominator");
  q.canonicalize();
  return q;
}

Elem element(const GroupTable& g, const json& j, const std::string& field) {
  const std::string label = as_string(j, field);
  const auto x = g.find(label);
  if (!x) fail(ErrorCategory::Reference, field, "unknown element '" + label + "' in " + g.name());
  return *x;
}

GroupPtr construct(const std::string& text, const std::string& field) {
  static const std::regex factor(R"(^([CSD])(\d+)$)");
  GroupPtr result;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, 'x')) {
    GroupPtr part;
    std::smatch m;
    if (token == "Q8") {
      part = quaternion();
    } else if (std::regex_match(token, m, factor)) {
      const unsigned n = static_cast<unsigned>(std::stoul(m[2]));
      if (m[1] == "C") {
        if (n < 1 || n > 100000) fail(ErrorCategory::Schema, field, "cyclic order out of range");
        part = cyclic(n);
      } else if (m[1] == "S") {
        if (n < 1 || n > 7) fail(ErrorCategory::Schema, field, "symmetric degree must lie in 1..7");
        part = symmetric(n);
      } else {
        if (n < 2 || n > 5000) fail(ErrorCategory::Schema, field, "dihedral parameter out of range");
        part = dihedral(n);
      }
    } else {
      fail(ErrorCategory::Schema, field, "unknown construction '" + token + "'");
    }
    result = result ? direct_product(result, part) : part;
  }
  if (!result) fail(ErrorCategory::Schema, field, "empty construction");
  return result;
}

std::vector<std::vector<Elem>> parse_action(const GroupPtr& normal, const GroupPtr& acting, const json& spec,
                                            const std::string& field) {
  if (!spec.is_object()) fail(ErrorCategory::Schema, field, "expected {acting generator: {normal label: image}}");
  const Subgroup whole_n = Subgroup::whole(normal);
  std::map<Elem, std::vector<Elem>> gen_maps;
  for (const auto& [alabel, images] : spec.items()) {
    const std::string f = field + "." + alabel;
    const Elem a = element(*acting, json(alabel), f);
    std::vector<Elem> src, dst;
    if (!images.is_object()) fail(ErrorCategory::Schema, f, "expected an object of images");
    for (const auto& [klabel, image] : images.items()) {
      src.push_back(element(*normal, json(klabel), f + "." + klabel));
      dst.push_back(element(*normal, image, f + "." + klabel));
    }
    if (closure(normal, src).order() != normal->order()) {
      fail(ErrorCategory::Schema, f, "images must be given on a generating set of the normal factor");
    }
    auto hom = extend_homomorphism(whole_n, src, dst, *normal);
    if (!hom) fail(ErrorCategory::Precondition, f, "assignment does not extend to an endomorphism");
    gen_maps[a] = *hom;
  }
  std::vector<Elem> agens;
  for (const auto& [a, m] : gen_maps) agens.push_back(a);
  if (closure(acting, agens).order() != acting->order()) {
    fail(ErrorCategory::Schema, field, "action must be given on a generating set of the acting group");
  }
  // phi(a s) = phi(a) o phi(s), filled breadth first from the identity.
  const std::size_t n = normal->order();
  std::vector<std::vector<Elem>> action(acting->order());
  std::vector<Elem> frontier{acting->identity()};
  action[acting->identity()].resize(n);
  for (Elem k = 0; k < n; ++k) action[acting->identity()][k] = k;
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem a : frontier) {
      for (const auto& [s, phi_s] : gen_maps) {
        const Elem as = acting->mul(a, s);
        std::vector<Elem> composed(n);
        for (Elem k = 0; k < n; ++k) composed[k] = action[a][phi_s[k]];
        if (action[as].empty()) {
          action[as] = std::move(composed);
          next.push_back(as);
        } else if (action[as] != composed) {
          fail(ErrorCategory::Precondition, field, "generator images do not define a homomorphism into Aut");
        }
      }
    }
    frontier = std::move(next);
  }
  return action;
}

}  // namespace

GroupPtr parse_group(const json& spec, const std::string& field) {
  try {
    if (spec.is_string()) return construct(spec.get<std::string>(), field);
    if (!spec.is_object()) fail(ErrorCategory::Schema, field, "expected a string or an object");
    if (spec.contains("construct")) return construct(as_string(spec["construct"], field + ".construct"), field);
    if (spec.contains("permutations")) {
      const json& p = spec["permutations"];
      const std::string f = field + ".permutations";
      const unsigned degree = as_unsigned(require(p, "degree", f), f + ".degree");
      if (degree < 1 || degree > 12) fail(ErrorCategory::Schema, f + ".degree", "degree must lie in 1..12");
      std::vector<Permutation> gens;
      const json& list = require(p, "generators", f);
      if (!list.is_array()) fail(ErrorCategory::Schema, f + ".generators", "expected an array");
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string gf = f + ".generators[" + std::to_string(i) + "]";
        try {
          gens.push_back(parse_cycles(as_string(list[i], gf), degree));
        } catch (const PreconditionError& e) {
          fail(ErrorCategory::Schema, gf, e.what());
        }
      }
      return from_permutations(degree, gens, spec.value("name", ""));
    }
    if (spec.contains("table")) {
      const std::string f = field + ".table";
      std::vector<std::vector<Elem>> table;
      try {
        table = spec["table"].get<std::vector<std::vector<Elem>>>();
      } catch (const json::exception&) {
        fail(ErrorCategory::Schema, f, "expected a square array of element indices");
      }
      std::vector<std::string> labels;
      if (spec.contains("labels")) {
        if (!spec["labels"].is_array()) fail(ErrorCategory::Schema, field + ".labels", "expected an array");
        for (const auto& l : spec["labels"]) labels.push_back(as_string(l, field + ".labels"));
      }
      return GroupTable::from_table(std::move(table), std::move(labels), spec.value("name", "table"));
    }
    if (spec.contains("semidirect")) {
      const json& sd = spec["semidirect"];
      const std::string f = field + ".semidirect";
      const GroupPtr normal = parse_group(require(sd, "normal", f), f + ".normal");
      const GroupPtr acting = parse_group(require(sd, "acting", f), f + ".acting");
      return semidirect_product(normal, acting, parse_action(normal, acting, require(sd, "action", f), f + ".action"));
    }
    fail(ErrorCategory::Schema, field, "expected one of construct, permutations, table, semidirect");
  } catch (const PreconditionError& e) {
    fail(ErrorCategory::Precondition, field, e.what());
  }
}

namespace {

struct Context {
  GroupPtr group;
  std::map<std::string, Subgroup> subgroups;
  std::map<std::string, Character> characters;
  std::map<std::string, Measure> measures;

  const Subgroup& subgroup(const json& ref, const std::string& field) const {
    const std::string name = as_string(ref, field);
    auto it = subgroups.find(name);
    if (it == subgroups.end()) fail(ErrorCategory::Reference, field, "unknown subgroup '" + name + "'");
    return it->second;
  }

  // A missing reference or "trivial" means the trivial character of k.
  Character character(const json* ref, const Subgroup& k, const std::string& field) const {
    if (ref == nullptr) return Character::trivial(k);
    const std::string name = as_string(*ref, field);
    if (name == "trivial") return Character::trivial(k);
    auto it = characters.find(name);
    if (it == characters.end()) fail(ErrorCategory::Reference, field, "unknown character '" + name + "'");
    if (!(it->second.domain() == k)) {
      fail(ErrorCategory::Reference, field, "character '" + name + "' is defined on a different subgroup");
    }
    return it->second;
  }

  const Measure& measure(const json& ref, const std::string& field) const {
    const std::string name = as_string(ref, field);
    auto it = measures.find(name);
    if (it == measures.end()) fail(ErrorCategory::Reference, field, "unknown measure '" + name + "'");
    return it->second;
  }

  Factor factor(const json& spec, const std::string& field) const {
    const Subgroup& k = subgroup(require(spec, "subgroup", field), field + ".subgroup");
    const json* c = spec.contains("character") ? &spec["character"] : nullptr;
    return Factor{k, character(c, k, field + ".character")};
  }
};

void load_definitions(const json& s, Context& ctx) {
  ctx.subgroups.emplace("G", Subgroup::whole(ctx.group));
  ctx.subgroups.emplace("E", Subgroup::trivial(ctx.group));
  if (s.contains("subgroups")) {
    if (!s["subgroups"].is_object()) fail(ErrorCategory::Schema, "subgroups", "expected an object");
    for (const auto& [name, gens] : s["subgroups"].items()) {
      const std::string f = "subgroups." + name;
      if (!gens.is_array()) fail(ErrorCategory::Schema, f, "expected an array of generator labels");
      std::vector<Elem> seed;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        seed.push_back(element(*ctx.group, gens[i], f + "[" + std::to_string(i) + "]"));
      }
      ctx.subgroups.insert_or_assign(name, closure(ctx.group, seed));
    }
  }
  if (s.contains("characters")) {
    if (!s["characters"].is_object()) fail(ErrorCategory::Schema, "characters", "expected an object");
    const unsigned n = ctx.group->exponent();
    for (const auto& [name, spec] : s["characters"].items()) {
      const std::string f = "characters." + name;
      const Subgroup& k = ctx.subgroup(require(spec, "subgroup", f), f + ".subgroup");
      const json& rot = require(spec, "rotations", f);
      if (!rot.is_object()) fail(ErrorCategory::Schema, f + ".rotations", "expected {label: rotation}");
      std::vector<Elem> gens;
      std::vector<unsigned> nums;
      for (const auto& [label, value] : rot.items()) {
        const std::string rf = f + ".rotations." + label;
        const Elem x = element(*ctx.group, json(label), rf);
        if (!k.contains(x)) fail(ErrorCategory::Reference, rf, "element is not in the subgroup");
        const mpq_class q = as_rational(value, rf) * n;
        if (q.get_den() != 1) {
          fail(ErrorCategory::Precondition, rf, "rotation is not a multiple of 1/" + std::to_string(n));
        }
        long num = q.get_num().get_si() % static_cast<long>(n);
        if (num < 0) num += n;
        gens.push_back(x);
        nums.push_back(static_cast<unsigned>(num));
      }
      if (closure(ctx.group, gens).order() != k.order()) {
        fail(ErrorCategory::Reference, f + ".rotations", "rotations must be assigned on a generating set");
      }
      auto rho = Character::from_generators(k, gens, nums);
      if (!rho) fail(ErrorCategory::Precondition, f + ".rotations", "rotations are not multiplicative");
      ctx.characters.insert_or_assign(name, *rho);
    }
  }
  if (s.contains("measures")) {
    if (!s["measures"].is_object()) fail(ErrorCategory::Schema, "measures", "expected an object");
    const unsigned n = ctx.group->exponent();
    for (const auto& [name, spec] : s["measures"].items()) {
      const std::string f = "measures." + name;
      if (spec.is_object()) {
        const Factor fac = ctx.factor(spec, f);
        ctx.measures.insert_or_assign(name, Measure::char_idem(fac.subgroup, fac.character));
        continue;
      }
      if (!spec.is_array()) fail(ErrorCategory::Schema, f, "expected a list of terms or {subgroup, character}");
      Measure mu(ctx.group);
      for (std::size_t i = 0; i < spec.size(); ++i) {
        const std::string tf = f + "[" + std::to_string(i) + "]";
        const Elem x = element(*ctx.group, require(spec[i], "element", tf), tf + ".element");
        const mpq_class w = as_rational(require(spec[i], "weight", tf), tf + ".weight");
        CycloScalar z = CycloScalar::rational(w, n);
        if (spec[i].contains("rotation")) {
          const mpq_class r = as_rational(spec[i]["rotation"], tf + ".rotation") * n;
          if (r.get_den() != 1) {
            fail(ErrorCategory::Precondition, tf + ".rotation", "rotation is not a multiple of 1/" + std::to_string(n));
          }
          z *= CycloScalar::root_of_unity(r.get_num().get_si(), n);
        }
        mu.add(x, z);
      }
      ctx.measures.insert_or_assign(name, std::move(mu));
    }
  }
}

const json& params_of(const json& s) {
  static const json empty = json::object();
  if (!s.contains("params")) return empty;
  if (!s["params"].is_object()) fail(ErrorCategory::Schema, "params", "expected an object");
  return s["params"];
}

IterationOptions iteration_options(const json& p, const RunOptions& o, std::size_t default_cap = 500) {
  IterationOptions it;
  it.max_iterations = default_cap;
  if (p.contains("tolerance")) it.tolerance = as_double(p["tolerance"], "params.tolerance");
  if (p.contains("max_iterations")) it.max_iterations = as_unsigned(p["max_iterations"], "params.max_iterations");
  if (o.tolerance) it.tolerance = *o.tolerance;
  if (o.max_iterations) it.max_iterations = *o.max_iterations;
  if (!(it.tolerance > 0)) fail(ErrorCategory::Schema, "params.tolerance", "must be positive");
  if (it.max_iterations == 0) fail(ErrorCategory::Schema, "params.max_iterations", "must be positive");
  return it;
}

json limit_json(const LimitReport& r, const GroupTable& g) {
  json out{{"prediction", to_string(r.prediction)},
           {"iterations", r.iterations},
           {"residual", r.residual},
           {"distance", r.distance},
           {"persistent_residual", r.persistent_residual},
           {"absorption", r.absorption},
           {"agreement", r.agreement},
           {"residual_series", r.residual_series},
           {"empirical", to_json(r.empirical, g)}};
  if (r.limit_subgroup) out["limit_subgroup"] = to_json(*r.limit_subgroup);
  if (r.limit_character) out["limit_character"] = to_json(*r.limit_character);
  if (r.obstruction) out["obstruction"] = to_json(*r.obstruction);
  if (r.coset_representative) out["coset_representative"] = g.label(*r.coset_representative);
  return out;
}

RunResult task_group(const Context& ctx) {
  const GroupTable& g = *ctx.group;
  json out{{"group", g.name()}, {"order", g.order()}, {"exponent", g.exponent()}, {"abelian", g.is_abelian()}};
  if (g.order() <= 720) out["subgroup_count"] = all_subgroups(ctx.group).size();
  if (g.order() <= 128) out["elements"] = g.labels();
  json named = json::object();
  for (const auto& [name, k] : ctx.subgroups) named[name] = to_json(k);
  out["subgroups"] = named;
  return {out, true};
}

RunResult task_classify(const Context& ctx, const json& p) {
  const Measure& mu = ctx.measure(require(p, "measure", "params"), "params.measure");
  const IdempotentClass c = classify_idempotent(mu);
  json out{{"kind", to_string(c.kind)}, {"tv_norm", tv_norm(mu)}};
  if (c.subgroup) out["subgroup"] = to_json(*c.subgroup);
  if (c.character) out["character"] = to_json(*c.character);
  return {out, true};
}

RunResult task_commute(const Context& ctx, const json& p) {
  const Factor f1 = ctx.factor(json{{"subgroup", require(p, "K1", "params")},
                                    {"character", p.value("rho1", json("trivial"))}},
                               "params");
  const Factor f2 = ctx.factor(json{{"subgroup", require(p, "K2", "params")},
                                    {"character", p.value("rho2", json("trivial"))}},
                               "params");
  const CommutationVerdict v = classify_pair(f1.subgroup, f1.character, f2.subgroup, f2.character,
                                             CommutationOptions{true});
  json out{{"verdict", to_string(v.kind)}, {"reason", v.reason}};
  if (v.product_subgroup) out["product_subgroup"] = to_json(*v.product_subgroup);
  if (v.product_character) out["product_character"] = to_json(*v.product_character);
  if (v.witness) out["witness"] = ctx.group->label(*v.witness);
  return {out, true};
}

std::vector<Factor> factors_of(const Context& ctx, const json& p) {
  const json& list = require(p, "factors", "params");
  if (!list.is_array() || list.empty()) fail(ErrorCategory::Schema, "params.factors", "expected a non-empty array");
  std::vector<Factor> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    out.push_back(ctx.factor(list[i], "params.factors[" + std::to_string(i) + "]"));
  }
  return out;
}

RunResult task_limit(const Context& ctx, const json& p, const RunOptions& o) {
  const auto factors = factors_of(ctx, p);
  const LimitReport r = idempotent_power_limit(factors, iteration_options(p, o));
  const ProductStructureReport c = verify_idempotent_product(factors);
  json out = limit_json(r, *ctx.group);
  json prod_set = json::array();
  for (Elem x : c.product_set) prod_set.push_back(ctx.group->label(x));
  out["product_structure"] = {{"idempotent", c.idempotent},
                              {"nonzero", c.nonzero},
                              {"hypothesis_holds", c.hypothesis_holds},
                              {"product_set_is_subgroup", c.product_set_is_subgroup},
                              {"support_is_product_set", c.support_is_product_set},
                              {"extension_exists", c.extension_exists},
                              {"passed", c.passed},
                              {"summary", c.summary},
                              {"product_set", prod_set}};
  return {out, r.agreement && c.passed};
}

RunResult task_stromberg(const Context& ctx, const json& p, const RunOptions& o) {
  const Measure& mu = ctx.measure(require(p, "measure", "params"), "params.measure");
  const StrombergResult s = stromberg_check(mu, iteration_options(p, o, kStrombergMaxIterations));
  json out = limit_json(s.report, *ctx.group);
  out["verdict"] = s.verdict == StrombergResult::Verdict::Converges ? "Converges" : "Obstructed";
  out["generated"] = to_json(s.generated);
  if (s.normal) out["normal"] = to_json(*s.normal);
  return {out, s.report.agreement};
}

RunResult task_measure_groups(const Context& ctx, const json& p) {
  json out = json::object();
  bool ok = true;
  if (p.contains("subgroup")) {
    const Factor f = ctx.factor(p, "params");
    const Subgroup gk = g_k_rho(f.subgroup, f.character);
    out["normalizer"] = to_json(normalizer(f.subgroup));
    out["n_k_rho"] = to_json(n_k_rho(f.subgroup, f.character));
    out["g_k_rho"] = to_json(gk);
    out["omega_partition_size"] = omega_partition(f.subgroup, f.character).size();
  }
  if (p.contains("pair")) {
    const json& q = p["pair"];
    const Factor f1 = ctx.factor(json{{"subgroup", require(q, "K1", "params.pair")},
                                      {"character", q.value("rho1", json("trivial"))}},
                                 "params.pair");
    const Factor f2 = ctx.factor(json{{"subgroup", require(q, "K2", "params.pair")},
                                      {"character", q.value("rho2", json("trivial"))}},
                                 "params.pair");
    const GammaProductReport r = verify_gamma_product(f1.subgroup, f1.character, f2.subgroup, f2.character);
    out["pair"] = {{"product", to_json(r.product)},
                   {"g1", to_json(r.g1)},
                   {"g2", to_json(r.g2)},
                   {"g12", to_json(r.g12)},
                   {"h1", to_json(r.h1)},
                   {"h2", to_json(r.h2)},
                   {"generated", to_json(r.generated)},
                   {"pairs_checked", r.pairs_checked},
                   {"pairs_in_gamma", r.pairs_in_gamma},
                   {"forward_ok", r.forward_ok},
                   {"reverse_ok", r.reverse_ok},
                   {"strict", r.strict}};
    ok = r.forward_ok && r.reverse_ok;
  }
  if (out.empty()) fail(ErrorCategory::Schema, "params", "expected subgroup and/or pair");
  return {out, ok};
}

RunResult task_free_walk(const json& p) {
  FreeDecayOptions o;
  o.word_budget = default_word_budget();
  const unsigned m = p.contains("m") ? as_unsigned(p["m"], "params.m") : 2;
  const unsigned n = p.contains("n") ? as_unsigned(p["n"], "params.n") : 3;
  if (p.contains("max_power")) o.max_power = as_unsigned(p["max_power"], "params.max_power");
  if (p.contains("epsilon")) o.epsilon = as_rational(p["epsilon"], "params.epsilon");
  if (p.contains("word_budget")) o.word_budget = as_unsigned(p["word_budget"], "params.word_budget");
  const DecayReport r = free_product_decay(m, n, o);
  json maxc = json::array(), approx = json::array(), mass = json::array();
  for (const auto& q : r.max_coefficient) {
    maxc.push_back(q.get_str());
    approx.push_back(q.get_d());
  }
  for (const auto& q : r.total_mass) mass.push_back(q.get_str());
  json out{{"m", m},
           {"n", n},
           {"max_coefficient", maxc},
           {"max_coefficient_approx", approx},
           {"support_size", r.support_size},
           {"total_mass", mass},
           {"strictly_decreasing", r.strictly_decreasing},
           {"epsilon", o.epsilon.get_str()},
           {"budget_exceeded", r.budget_exceeded},
           {"powers_computed", r.powers_computed}};
  out["below_epsilon_at"] = r.below_epsilon_at ? json(*r.below_epsilon_at) : json(nullptr);
  return {out, !r.budget_exceeded};
}

RunResult task_example33(const json& p, const RunOptions& o) {
  unsigned grid = p.contains("grid") ? as_unsigned(p["grid"], "params.grid") : 64;
  if (o.grid) grid = *o.grid;
  if (grid < 2 || grid > 2048) fail(ErrorCategory::Schema, "params.grid", "grid must lie in 2..2048");
  const TorusProductReport r = torus_product_report(grid);
  json panel = json::array();
  for (const auto& e : r.panel) {
    panel.push_back({{"function", e.name}, {"product", e.product}, {"haar", e.haar}, {"delta", e.delta}});
  }
  return {json{{"grid", grid}, {"threshold", r.threshold}, {"separated", r.separated}, {"panel", panel}}, r.separated};
}

RunResult task_suite(const json& p, const RunOptions& o) {
  SuiteOptions so;
  if (p.contains("only")) so.only = as_string(p["only"], "params.only");
  if (o.only) so.only = o.only;
  if (o.grid) so.grid = *o.grid;
  const auto results = run_suite(so);
  json fixtures = json::array();
  bool ok = true;
  for (const auto& r : results) {
    fixtures.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    ok = ok && r.passed;
  }
  return {json{{"fixtures", fixtures}, {"passed", ok}}, ok};
}

const std::vector<std::string> kTasks = {"group",          "classify",  "commute",   "limit",      "stromberg",
                                         "measure-groups", "free-walk", "example33", "paper-suite"};

}  // namespace

RunResult run_scenario(const json& s, const std::string& task_in, const RunOptions& options) {
  if (!s.is_object()) fail(ErrorCategory::Schema, "scenario", "expected a JSON object");
  if (s.contains("schema") && s["schema"] != kScenarioSchema) {
    fail(ErrorCategory::Schema, "schema", std::string("unsupported schema, expected ") + kScenarioSchema);
  }
  std::string task = task_in;
  if (s.contains("task")) {
    const std::string tag = as_string(s["task"], "task");
    if (!task.empty() && tag != task) fail(ErrorCategory::Schema, "task", "scenario is for '" + tag + "', not '" + task + "'");
    task = tag;
  }
  if (std::find(kTasks.begin(), kTasks.end(), task) == kTasks.end()) {
    fail(ErrorCategory::Schema, "task", "unknown task '" + task + "'");
  }
  const json& p = params_of(s);
  try {
    RunResult r;
    if (task == "free-walk") {
      r = task_free_walk(p);
    } else if (task == "example33") {
      r = task_example33(p, options);
    } else if (task == "paper-suite") {
      r = task_suite(p, options);
    } else {
      Context ctx;
      ctx.group = parse_group(require(s, "group", "scenario"));
      load_definitions(s, ctx);
      if (task == "group") r = task_group(ctx);
      else if (task == "classify") r = task_classify(ctx, p);
      else if (task == "commute") r = task_commute(ctx, p);
      else if (task == "limit") r = task_limit(ctx, p, options);
      else if (task == "stromberg") r = task_stromberg(ctx, p, options);
      else r = task_measure_groups(ctx, p);
      r.report["group"] = ctx.group->name();
    }
    r.report["task"] = task;
    r.report["ok"] = r.ok;
    return r;
  } catch (const PreconditionError& e) {
    fail(ErrorCategory::Precondition, "params", e.what());
  } catch (const InternalCheckError& e) {
    fail(ErrorCategory::Internal, task, e.what());
  }
}

RunResult run_scenario_file(const std::string& path, const std::string& task, const RunOptions& options) {
  std::ifstream in(path);
  if (!in) fail(ErrorCategory::Parse, "scenario", "cannot open '" + path + "'");
  json s;
  try {
    s = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorCategory::Parse, "scenario", e.what());
  }
  return run_scenario(s, task, options);
}

namespace {

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); });
    if (flat && j.size() <= 16) {
      std::string s;
      for (const auto& x : j) s += (s.empty() ? "" : ", ") + (x.is_string() ? x.get<std::string>() : x.dump());
      rows.emplace_back(prefix, "[" + s + "]");
    } else if (flat) {
      rows.emplace_back(prefix, "[" + std::to_string(j.size()) + " values]");
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
    }
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

}  // namespace

std::string render_table(const json& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::string out;
  for (const auto& [k, v] : rows) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  return out;
}

}  // namespace idem
