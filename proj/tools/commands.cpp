#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "format.hpp"
#include "json.hpp"
#include "taylor/absorption.hpp"
#include "taylor/catalog.hpp"
#include "taylor/csp.hpp"
#include "taylor/edges.hpp"
#include "taylor/error.hpp"
#include "taylor/verify.hpp"

namespace taylor::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Unknown };

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    default: return "unknown";
  }
}

Status worse(Status a, Status b) {
  if (a == Status::Fail || b == Status::Fail) return Status::Fail;
  if (a == Status::Unknown || b == Status::Unknown) return Status::Unknown;
  return Status::Pass;
}

int exit_code(Status s) {
  switch (s) {
    case Status::Pass: return kPass;
    case Status::Fail: return kCounterexample;
    default: return kCapExceeded;
  }
}

class UsageError : public Error {
  using Error::Error;
};

std::string set_text(const std::vector<Elem>& elems) {
  std::string s = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) s += (i ? "," : "") + std::to_string(elems[i]);
  return s + "}";
}

std::string set_text(const Json& arr) {
  std::vector<Elem> v;
  for (const auto& e : arr) v.push_back(e.get<Elem>());
  return set_text(v);
}

std::string signature_text(const FiniteAlgebra& alg) {
  std::string s;
  for (const auto& op : alg.ops()) s += (s.empty() ? "" : ", ") + op.symbol() + "/" + std::to_string(op.arity());
  return s;
}

std::string term_text(const TermOperation& t) { return t.has_term() ? to_string(t.term()) : "(table only)"; }

Json pairs_json(const std::vector<std::pair<Elem, Elem>>& pairs) {
  Json arr = Json::array();
  for (auto [a, b] : pairs) arr.push_back({a, b});
  return arr;
}

Json subset_json(const Subset& s) {
  Json arr = Json::array();
  for (Elem e : s.elements()) arr.push_back(e);
  return arr;
}

std::vector<FiniteAlgebra> load_algebras(const std::vector<std::string>& paths) {
  std::vector<FiniteAlgebra> out;
  for (const auto& p : paths)
    for (auto& a : parse_algebras(read_file(p), p)) out.push_back(std::move(a));
  return out;
}

EdgeConfig edge_config(const RunConfig& c) {
  EdgeConfig e;
  e.arities = c.arities;
  e.closure_cap = c.closure_cap;
  return e;
}

// ------------------------------------------------------------------ analyze

Json analyze_json(const FiniteAlgebra& alg, const RunConfig& config, Status& status) {
  Json j;
  j["algebra"] = alg.name();
  j["size"] = alg.size();
  j["signature"] = signature_text(alg);

  const ValidationReport v = validate_algebra(alg);
  Json issues = Json::array();
  for (const auto& i : v.issues) issues.push_back(i.message);
  j["validation"] = {{"valid", v.valid()}, {"idempotent", v.idempotent()}, {"issues", issues}};
  if (!v.valid() || !v.idempotent()) {
    status = Status::Fail;
    j["status"] = status_name(status);
    return j;
  }

  const TaylorReport tr = taylor_report(alg, config.closure_cap);
  Json taylor = {{"has_taylor", to_string(tr.has_taylor)}};
  taylor["witness_arity"] = tr.witness_arity;
  taylor["witness"] = tr.witness ? term_text(*tr.witness) : "";
  taylor["arities_checked"] = tr.arities_checked;
  taylor["minimal_taylor_bounded"] = to_string(tr.minimal_taylor_bounded);
  j["taylor"] = taylor;
  if (tr.has_taylor == Tristate::No) status = worse(status, Status::Fail);
  if (tr.has_taylor != Tristate::Yes) {
    if (tr.has_taylor == Tristate::Unknown) status = worse(status, Status::Unknown);
    j["status"] = status_name(status);
    return j;
  }

  EdgeGraph edges;
  try {
    edges = compute_edges(alg, edge_config(config));
  } catch (const CapExceeded& e) {
    j["edges"] = {{"error", e.what()}};
    status = worse(status, Status::Unknown);
    j["status"] = status_name(status);
    return j;
  } catch (const Error& e) {
    j["edges"] = {{"error", e.what()}};
    status = worse(status, Status::Fail);
    j["status"] = status_name(status);
    return j;
  }
  j["edges"] = {{"as", pairs_json(edges.edges(Flavor::AS))},
                {"sm", pairs_json(edges.edges(Flavor::SM))},
                {"s", pairs_json(edges.edges(Flavor::S))},
                {"unknown", pairs_json(edges.unknown_pairs())}};
  if (edges.has_unknowns()) status = worse(status, Status::Unknown);

  Json comps;
  for (Flavor f : {Flavor::S, Flavor::AS, Flavor::SM, Flavor::ASM}) {
    const auto d = component_analysis(edges, f);
    Json strong = Json::array(), sources = Json::array();
    for (const auto& c : d.components) strong.push_back(c);
    for (std::size_t s : d.sources) sources.push_back(d.components[s]);
    comps[to_string(f)] = {{"strong", strong},
                           {"min", subset_json(d.min)},
                           {"sources", sources},
                           {"weakly_connected", d.weak_components.size() == 1}};
  }
  j["components"] = comps;

  Json abs;
  if (alg.size() > config.subset_cap) {
    abs["checked"] = false;
    abs["reason"] = "size " + std::to_string(alg.size()) + " above the subset cap " +
                    std::to_string(config.subset_cap);
  } else {
    try {
      const AbsorptionReport r = absorption_report(alg, config.subset_cap, 3, config.closure_cap);
      abs["checked"] = true;
      abs["projectivity_cap"] = r.projectivity_cap;
      Json subsets = Json::array();
      for (const auto& c : r.subsets) {
        if (!c.subuniverse) continue;
        Json s;
        s["subset"] = subset_json(c.B);
        s["binary"] = c.binary.absorbing;
        s["binary_witness"] = c.binary.witness && c.binary.witness->term ? term_text(*c.binary.witness->term) : "";
        s["ternary"] = c.ternary.absorbing;
        s["ternary_witness"] = c.ternary.witness && c.ternary.witness->term ? term_text(*c.ternary.witness->term)
                                                                              : "";
        if (c.projectivity) {
          s["projective"] = c.projectivity->projective_upto;
          s["strongly_projective"] = c.projectivity->strongly_projective_upto;
          s["absorbing_element"] = c.projectivity->absorbing_element;
        }
        subsets.push_back(s);
      }
      abs["subuniverses"] = subsets;
      abs["transports"] = r.transports.size();
      abs["failures"] = r.failures;
      if (!r.ok()) status = worse(status, Status::Fail);
    } catch (const CapExceeded& e) {
      abs["checked"] = false;
      abs["reason"] = e.what();
      status = worse(status, Status::Unknown);
    } catch (const CrossCheckFailed& e) {
      abs["checked"] = false;
      abs["reason"] = e.what();
      status = worse(status, Status::Fail);
    }
  }
  j["absorption"] = abs;
  j["status"] = status_name(status);
  return j;
}

std::string pairs_text(const Json& arr) {
  if (arr.empty()) return "none";
  std::string s;
  for (const auto& p : arr)
    s += (s.empty() ? "" : " ") + std::to_string(p[0].get<Elem>()) + "->" + std::to_string(p[1].get<Elem>());
  return s;
}

void analyze_text(const Json& j, std::ostream& os) {
  os << "algebra " << j["algebra"].get<std::string>() << " (size " << j["size"].get<std::size_t>()
     << ", operations " << j["signature"].get<std::string>() << ")\n";
  const Json& v = j["validation"];
  os << "validation: " << (v["valid"].get<bool>() ? "valid" : "invalid") << ", "
     << (v["idempotent"].get<bool>() ? "idempotent" : "not idempotent") << "\n";
  for (const auto& i : v["issues"]) os << "  " << i.get<std::string>() << "\n";
  if (j.contains("taylor")) {
    const Json& t = j["taylor"];
    os << "taylor: " << t["has_taylor"].get<std::string>();
    if (t["witness_arity"].get<unsigned>() > 0)
      os << " (cyclic witness of arity " << t["witness_arity"].get<unsigned>() << ": "
         << t["witness"].get<std::string>() << ")";
    os << "; minimal taylor (bounded): " << t["minimal_taylor_bounded"].get<std::string>() << "\n";
  }
  if (j.contains("edges")) {
    const Json& e = j["edges"];
    if (e.contains("error")) {
      os << "edges: " << e["error"].get<std::string>() << "\n";
    } else {
      os << "edges:\n";
      for (const char* f : {"s", "as", "sm", "unknown"}) os << "  " << f << ": " << pairs_text(e[f]) << "\n";
    }
  }
  if (j.contains("components")) {
    os << "components:\n";
    for (const auto& [f, c] : j["components"].items()) {
      os << "  " << f << ": strong";
      for (const auto& comp : c["strong"]) os << " " << set_text(comp);
      os << "; " << f << "-min = " << set_text(c["min"]) << "; sources";
      for (const auto& comp : c["sources"]) os << " " << set_text(comp);
      os << "; " << (c["weakly_connected"].get<bool>() ? "weakly connected" : "not weakly connected") << "\n";
    }
  }
  if (j.contains("absorption")) {
    const Json& a = j["absorption"];
    if (!a["checked"].get<bool>()) {
      os << "absorption: not checked (" << a["reason"].get<std::string>() << ")\n";
    } else {
      os << "absorption (projectivity up to arity " << a["projectivity_cap"].get<unsigned>() << "):\n";
      for (const auto& s : a["subuniverses"]) {
        const std::string B = set_text(s["subset"]);
        os << "  " << B << ":";
        bool any = false;
        if (s["binary"].get<bool>()) {
          os << " " << B << " ◁₂";
          if (!s["binary_witness"].get<std::string>().empty()) os << " via " << s["binary_witness"].get<std::string>();
          os << ";";
          any = true;
        }
        if (s["ternary"].get<bool>()) {
          os << " " << B << " ◁₃";
          if (!s["ternary_witness"].get<std::string>().empty())
            os << " via " << s["ternary_witness"].get<std::string>();
          os << ";";
          any = true;
        }
        if (s.contains("projective")) {
          if (s["strongly_projective"].get<bool>()) {
            os << " strongly projective;";
            any = true;
          } else if (s["projective"].get<bool>()) {
            os << " projective;";
            any = true;
          }
          if (s["absorbing_element"].get<bool>()) os << " absorbing element;";
        }
        if (!any) os << " subuniverse, not absorbing";
        os << "\n";
      }
      os << "  transports checked: " << a["transports"].get<std::size_t>() << "\n";
      for (const auto& f : a["failures"]) os << "  FAILURE: " << f.get<std::string>() << "\n";
    }
  }
  os << "status: " << j["status"].get<std::string>() << "\n";
}

// -------------------------------------------------------------------- edges

std::string dot_graph(const FiniteAlgebra& alg, const EdgeGraph& edges) {
  std::ostringstream os;
  os << "// edges of " << alg.name() << "\n";
  os << "// legend: s solid, as-only dashed, sm-only dotted\n";
  const auto unknown = edges.unknown_pairs();
  os << "// unknown: ";
  if (unknown.empty()) os << "none";
  for (std::size_t i = 0; i < unknown.size(); ++i)
    os << (i ? " " : "") << unknown[i].first << "->" << unknown[i].second;
  os << "\n";
  os << "digraph \"" << alg.name() << "\" {\n";
  os << "  node [shape=circle];\n";
  for (Elem a = 0; a < alg.size(); ++a) os << "  " << a << ";\n";
  for (auto [a, b] : edges.edges(Flavor::ASM)) {
    const char* style = edges.s(a, b) ? "solid" : edges.as(a, b) ? "dashed" : "dotted";
    const char* label = edges.s(a, b) ? "s" : edges.as(a, b) ? "as" : "sm";
    os << "  " << a << " -> " << b << " [style=" << style << ", label=\"" << label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

int run_edges(const RunConfig& config, std::ostream& os) {
  Status status = Status::Pass;
  Json all = Json::array();
  std::string text;
  for (const auto& alg : load_algebras(config.inputs)) {
    require_valid(alg);
    const EdgeGraph edges = compute_edges(alg, edge_config(config));
    if (edges.has_unknowns()) status = worse(status, Status::Unknown);
    if (config.format == Format::Dot) {
      text += dot_graph(alg, edges);
      continue;
    }
    Json j = {{"algebra", alg.name()},
              {"as", pairs_json(edges.edges(Flavor::AS))},
              {"sm", pairs_json(edges.edges(Flavor::SM))},
              {"s", pairs_json(edges.edges(Flavor::S))},
              {"unknown", pairs_json(edges.unknown_pairs())}};
    text += "algebra " + alg.name() + "\n";
    for (const char* f : {"s", "as", "sm", "unknown"}) text += "  " + std::string(f) + ": " + pairs_text(j[f]) + "\n";
    all.push_back(j);
  }
  if (config.format == Format::Json)
    os << all.dump(2) << "\n";
  else
    os << text;
  return exit_code(status);
}

// ------------------------------------------------------------------- verify

Json checks_json(const AxiomReport& r, Status& status) {
  Json arr = Json::array();
  for (const auto& c : r.checks) {
    arr.push_back({{"name", c.name},
                   {"status", to_string(c.status)},
                   {"detail", c.detail},
                   {"instances", c.instances},
                   {"undecided", c.undecided}});
    if (c.status == AxiomStatus::Fail) status = worse(status, Status::Fail);
    if (c.status == AxiomStatus::Skipped) status = worse(status, Status::Unknown);
  }
  return arr;
}

void checks_text(const Json& arr, std::ostream& os) {
  for (const auto& c : arr) {
    os << "  [" << c["status"].get<std::string>() << "] " << c["name"].get<std::string>();
    if (!c["detail"].get<std::string>().empty()) os << ": " << c["detail"].get<std::string>();
    os << "\n";
  }
}

int run_verify(const RunConfig& config, std::ostream& os) {
  const auto seeds = load_algebras(config.inputs);
  for (const auto& a : seeds) require_valid(a);
  const Template tpl = Template::hs_closure(seeds, config.catalog_cap);
  std::vector<FiniteAlgebra> members;
  for (const auto& m : tpl.members()) members.push_back(m.algebra);
  const auto catalog = with_edges(members, edge_config(config));

  Status status = Status::Pass;
  VerifyBudget budget;
  budget.closure_cap = config.closure_cap;
  Json j;
  j["seed"] = config.seed;
  Json names = Json::array();
  for (const auto& m : members) names.push_back(m.name());
  j["catalog"] = names;
  j["axioms"] = checks_json(verify_edge_axioms(catalog, budget), status);
  Json theorems = Json::array();
  for (const auto& e : catalog)
    theorems.push_back(
        {{"algebra", e.algebra.name()},
         {"checks", checks_json(verify_edge_theorems(e.algebra, e.edges, config.subset_cap, config.closure_cap),
                                status)}});
  j["theorems"] = theorems;
  j["status"] = status_name(status);

  if (config.format == Format::Json) {
    os << j.dump(2) << "\n";
  } else {
    os << "catalog (" << members.size() << " members):";
    for (const auto& n : j["catalog"]) os << " " << n.get<std::string>();
    os << "\nedge axioms:\n";
    checks_text(j["axioms"], os);
    for (const auto& t : j["theorems"]) {
      os << "theorems for " << t["algebra"].get<std::string>() << ":\n";
      checks_text(t["checks"], os);
    }
    os << "status: " << j["status"].get<std::string>() << "\n";
  }
  return exit_code(status);
}

// ---------------------------------------------------------------------- csp

NamedInstance load_instance(const RunConfig& config) {
  if (config.inputs.size() != 1) throw UsageError("expected exactly one instance file");
  return parse_instance(read_file(config.inputs[0]), builtin_catalog(), config.inputs[0]);
}

Json assignment_json(const Instance& inst, const Assignment& a) {
  Json j = Json::object();
  for (std::size_t v = 0; v < a.size(); ++v) j[inst.name(v)] = a[v];
  return j;
}

int run_solve(const RunConfig& config, std::ostream& os) {
  const NamedInstance ni = load_instance(config);
  const SolveResult r = brute_force_solve(ni.instance, config.all_solutions, config.search_limit);
  Json j;
  j["instance"] = ni.name;
  j["satisfiable"] = r.satisfiable;
  Json sols = Json::array();
  for (const auto& s : r.solutions) sols.push_back(assignment_json(ni.instance, s));
  j["solutions"] = sols;
  if (config.format == Format::Json) {
    os << j.dump(2) << "\n";
  } else {
    os << "instance " << ni.name << ": " << (r.satisfiable ? "SAT" : "UNSAT") << "\n";
    for (const auto& s : j["solutions"]) {
      std::string line;
      for (const auto& [v, x] : s.items()) line += (line.empty() ? "" : " ") + v + "=" + std::to_string(x.get<Elem>());
      os << "  " << line << "\n";
    }
  }
  return r.satisfiable ? kPass : kCounterexample;
}

int run_minimize(const RunConfig& config, std::ostream& os) {
  const NamedInstance ni = load_instance(config);
  const MinimizeResult r = kl_minimize(ni.instance, config.k, config.l);
  const Instance& m = r.instance;
  if (config.format == Format::Json) {
    Json j;
    j["instance"] = ni.name;
    j["k"] = config.k;
    j["l"] = config.l;
    j["unsat"] = r.unsat;
    j["rounds"] = r.rounds;
    Json vars = Json::array();
    for (std::size_t v = 0; v < m.variable_count(); ++v)
      vars.push_back({{"name", m.name(v)}, {"domain", m.domain(v).name()}});
    j["variables"] = vars;
    Json cons = Json::array();
    for (const auto& c : m.constraints()) {
      Json scope = Json::array();
      for (std::size_t v : c.scope) scope.push_back(m.name(v));
      cons.push_back({{"scope", scope}, {"tuples", c.tuples}});
    }
    j["constraints"] = cons;
    os << j.dump(2) << "\n";
  } else {
    os << "# (" << config.k << "," << config.l << ")-minimization of " << ni.name << ": "
       << (r.unsat ? "UNSAT" : "consistent") << " after " << r.rounds << " rounds\n";
    os << emit_instance(ni.name, m, builtin_catalog());
  }
  return r.unsat ? kCounterexample : kPass;
}

// ------------------------------------------------------------------ catalog

int run_catalog(const RunConfig& config, std::ostream& os) {
  const auto algs = builtin_catalog();
  if (config.format == Format::Json) {
    Json arr = Json::array();
    for (const auto& a : algs) {
      Json ops = Json::array();
      for (const auto& op : a.ops())
        ops.push_back({{"symbol", op.symbol()}, {"arity", op.arity()}, {"table", op.table()}});
      arr.push_back({{"name", a.name()}, {"size", a.size()}, {"operations", ops}});
    }
    os << arr.dump(2) << "\n";
  } else {
    os << emit_algebras(algs);
  }
  return kPass;
}

int dispatch(const RunConfig& config, std::ostream& os) {
  const std::string& cmd = config.command;
  if (config.format == Format::Dot && cmd != "edges") throw UsageError("--format dot applies only to 'edges'");
  if (cmd == "catalog") return run_catalog(config, os);
  if (config.inputs.empty()) throw UsageError("'" + cmd + "' needs an input file");
  if (cmd == "edges") return run_edges(config, os);
  if (cmd == "verify") return run_verify(config, os);
  if (cmd == "csp-solve") return run_solve(config, os);
  if (cmd == "csp-minimize") return run_minimize(config, os);
  if (cmd == "analyze") {
    Status status = Status::Pass;
    Json all = Json::array();
    for (const auto& alg : load_algebras(config.inputs)) {
      Status s = Status::Pass;
      all.push_back(analyze_json(alg, config, s));
      status = worse(status, s);
    }
    if (config.format == Format::Json) {
      os << all.dump(2) << "\n";
    } else {
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (i) os << "\n";
        analyze_text(all[i], os);
      }
    }
    return exit_code(status);
  }
  throw UsageError("unknown command '" + cmd + "'");
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  int code = kPass;
  try {
    code = dispatch(config, buffer);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kCounterexample;
  }
  if (config.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(config.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << config.out << "\n";
      return kUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace taylor::cli
