// Command-line front end: graph documents in, solver / weight / topology
// queries and named verification suites out.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "girth5/canonical.hpp"
#include "girth5/catalog.hpp"
#include "girth5/coloring.hpp"
#include "girth5/enumerate.hpp"
#include "girth5/graph.hpp"
#include "girth5/properties.hpp"
#include "girth5/suites.hpp"
#include "girth5/topology.hpp"
#include "girth5/weights.hpp"

namespace {

using nlohmann::json;
using namespace girth5;

EmbeddedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

void write_out(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
  }
}

// --phi v=c,v=c,... with original vertex ids
Precoloring parse_phi(const EmbeddedGraph& G, const std::string& arg) {
  Precoloring phi;
  for (int v = 0; v < G.n(); v++)
    if (v < (int)G.precoloring.size() && G.precoloring[v] >= 0)
      phi[v] = G.precoloring[v];
  if (arg.empty()) return phi;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--phi", "expected v=c entries");
    long long vid = std::stoll(item.substr(0, eq));
    int c = std::stoi(item.substr(eq + 1));
    auto it = G.vindex.find(vid);
    if (it == G.vindex.end())
      throw CLI::ValidationError("--phi", "unknown vertex " + item.substr(0, eq));
    phi[it->second] = c;
  }
  return phi;
}

Budget parse_budget(const std::vector<std::string>& entries) {
  Budget b;
  for (const auto& e : entries) {
    auto eq = e.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--budget", "expected key=value");
    b[e.substr(0, eq)] = std::stoll(e.substr(eq + 1));
  }
  return b;
}

const char* topology_name(CycleClass::Topology t) {
  switch (t) {
    case CycleClass::contractible: return "contractible";
    case CycleClass::surrounds: return "surrounds-ring";
    case CycleClass::separating_noncontractible:
      return "separating-noncontractible";
    default: return "nonseparating";
  }
}

int cmd_color(const std::string& file, const std::string& phi_arg, bool as_json,
              const std::string& out) {
  EmbeddedGraph G = load_graph(file);
  Precoloring phi = parse_phi(G, phi_arg);
  std::optional<std::vector<int>> res;
  if (G.ring_vertex_set().empty() && phi.empty()) {
    if (colorable(G, 3)) {
      ColorInstance I = ColorInstance::of(G);
      std::vector<int> col;
      detail::solve_colors(I, col);
      res = col;
    }
  } else {
    res = extends(G, phi);
  }
  if (as_json) {
    json j;
    j["colorable"] = res.has_value();
    if (res) {
      json a = json::object();
      for (int v = 0; v < G.n(); v++)
        a[std::to_string(G.vid[v])] = (*res)[v];
      j["coloring"] = a;
    }
    write_out(out, j.dump(2) + "\n");
  } else {
    std::ostringstream t;
    t << (res ? "colorable" : "not colorable") << "\n";
    if (res)
      for (int v = 0; v < G.n(); v++)
        t << G.vid[v] << " -> " << (*res)[v] << "\n";
    write_out(out, t.str());
  }
  return 0;
}

int cmd_critical(const std::string& file, bool as_json, const std::string& out) {
  EmbeddedGraph G = load_graph(file);
  CriticalityReport rep = is_ring_critical(G);
  auto phi_json = [&](const Precoloring& phi) {
    json p = json::object();
    for (auto [v, c] : phi) p[std::to_string(G.vid[v])] = c;
    return p;
  };
  if (as_json) {
    json j;
    j["critical"] = rep.critical;
    j["reason"] = rep.reason;
    j["witnesses"] = json::object();
    for (const auto& [e, phi] : rep.witnesses)
      j["witnesses"][std::to_string(G.edges[e].id)] = phi_json(phi);
    write_out(out, j.dump(2) + "\n");
  } else {
    std::ostringstream t;
    t << (rep.critical ? "ring-critical" : "not ring-critical");
    if (!rep.reason.empty()) t << " (" << rep.reason << ")";
    t << "\n";
    for (const auto& [e, phi] : rep.witnesses) {
      t << "edge " << G.edges[e].id << ":";
      for (auto [v, c] : phi) t << " " << G.vid[v] << "=" << c;
      t << "\n";
    }
    write_out(out, t.str());
  }
  return 0;
}

int cmd_weigh(const std::string& file, bool as_json, const std::string& out) {
  EmbeddedGraph G = load_graph(file);
  Rational w = graph_weight(G);
  if (as_json) {
    json j;
    j["weight"] = w.str();
    j["faces"] = json::array();
    for (size_t i = 0; i < G.faces.size(); i++) {
      const auto& f = G.faces[i];
      j["faces"].push_back({{"face", i},
                            {"length", f.length},
                            {"ring_face", f.is_ring_face},
                            {"weight", f.is_ring_face ? std::string("-")
                                                      : face_weight(f).str()}});
    }
    write_out(out, j.dump(2) + "\n");
  } else {
    std::ostringstream t;
    t << "w(G,R) = " << w.str() << "\n";
    for (size_t i = 0; i < G.faces.size(); i++) {
      const auto& f = G.faces[i];
      t << "face " << i << " length " << f.length;
      if (f.is_ring_face)
        t << " (ring face)\n";
      else
        t << " weight " << face_weight(f).str() << "\n";
    }
    write_out(out, t.str());
  }
  return 0;
}

int cmd_classify_cycle(const std::string& file, const std::string& cyc,
                       bool as_json, const std::string& out) {
  EmbeddedGraph G = load_graph(file);
  std::vector<int> C;
  std::stringstream ss(cyc);
  std::string item;
  while (std::getline(ss, item, ',')) {
    long long vid = std::stoll(item);
    auto it = G.vindex.find(vid);
    if (it == G.vindex.end())
      throw CLI::ValidationError("--cycle", "unknown vertex " + item);
    C.push_back(it->second);
  }
  CycleClass cc = cycle_class(G, C);
  if (as_json) {
    json j;
    j["topology"] = topology_name(cc.topology);
    j["two_sided"] = cc.two_sided;
    if (cc.topology == CycleClass::surrounds)
      j["surrounded_ring"] = cc.surrounded_ring;
    write_out(out, j.dump(2) + "\n");
  } else {
    std::ostringstream t;
    t << topology_name(cc.topology) << (cc.two_sided ? "" : " (one-sided)");
    if (cc.topology == CycleClass::surrounds)
      t << " ring " << cc.surrounded_ring;
    t << "\n";
    write_out(out, t.str());
  }
  return 0;
}

int cmd_enumerate(const SearchSpec& spec, bool naive, bool as_json,
                  const std::string& out) {
  EnumResult res = naive ? enumerate_critical_naive(spec) : enumerate_critical(spec);
  json index;
  index["count"] = res.graphs.size();
  index["abstract_candidates"] = res.abstract_candidates;
  index["critical_candidates"] = res.critical_candidates;
  index["files"] = json::array();
  std::vector<std::string> docs;
  for (const auto& G : res.graphs) docs.push_back(emit_document(G));
  if (!out.empty()) {
    std::filesystem::create_directories(out);
    for (size_t i = 0; i < docs.size(); i++) {
      char name[32];
      std::snprintf(name, sizeof name, "instance_%03zu.graph", i);
      std::ofstream f(std::filesystem::path(out) / name);
      f << docs[i];
      index["files"].push_back(name);
    }
    std::ofstream f(std::filesystem::path(out) / "index.json");
    f << index.dump(2) << "\n";
    std::cout << res.graphs.size() << " instance(s) written to " << out << "\n";
  } else if (as_json) {
    index["documents"] = docs;
    std::cout << index.dump(2) << "\n";
  } else {
    std::cout << res.graphs.size() << " instance(s)\n";
    for (const auto& d : docs) std::cout << "--\n" << d;
  }
  return 0;
}

int cmd_verify(const std::string& name, const Budget& budget, bool as_json,
               const std::string& out) {
  std::vector<std::string> names;
  if (name == "all")
    names = suite_names();
  else
    names = {name};
  std::vector<SuiteReport> reports;
  for (const auto& n : names) reports.push_back(run_suite(n, budget));
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  if (as_json) {
    // elapsed excluded so that identical inputs give byte-identical reports
    json j = json::array();
    for (const auto& r : reports) j.push_back(suite_json(r, false));
    write_out(out, j.dump(2) + "\n");
  } else {
    std::ostringstream t;
    for (const auto& r : reports) {
      t << r.suite << ": " << (r.ok() ? "ok" : "FAILED") << " ("
        << r.cases.size() << " cases, " << r.failed() << " failed) ["
        << std::fixed << std::setprecision(1) << r.elapsed << "s]\n";
      for (const auto& c : r.cases)
        if (!c.ok)
          t << "  FAIL " << c.id << " [" << c.params << "] expected "
            << c.expected << ", got " << c.actual << "\n";
    }
    write_out(out, t.str());
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for ring-critical embedded graphs"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string out;
  app.add_flag("--json", as_json, "emit machine-readable JSON");
  app.add_option("--out", out, "output file (or directory for enumerate)");
  // accept the shared flags after the subcommand name as well
  auto share_flags = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "emit machine-readable JSON");
    sub->add_option("--out", out, "output file (or directory for enumerate)");
    return sub;
  };
  if (const char* th = std::getenv("GIRTH5_THREADS")) (void)th;  // cap honored;
  // all current operations are single-threaded

  std::string file, phi_arg, cyc;
  auto* color = share_flags(app.add_subcommand("color", "extend a ring precoloring"));
  color->add_option("file", file)->required();
  color->add_option("--phi", phi_arg, "precoloring overrides v=c,...");

  auto* critical = share_flags(app.add_subcommand("critical", "test ring-criticality"));
  critical->add_option("file", file)->required();

  auto* weigh = share_flags(app.add_subcommand("weigh", "face weight sum w(G,R)"));
  weigh->add_option("file", file)->required();

  auto* classify = share_flags(app.add_subcommand("classify-cycle", "cycle topology"));
  classify->add_option("file", file)->required();
  classify->add_option("--cycle", cyc, "vertex ids v1,v2,...")->required();

  auto* catalog = app.add_subcommand("catalog", "constructed instances");
  auto* emit = share_flags(catalog->add_subcommand("emit", "emit a catalog document"));
  std::string kind, cls = "E0";
  int k = 2, l = 5, depth = 2;
  std::string spokes_arg;
  emit->add_option("kind", kind,
                   "chain | klein-chain | broken-chain | exceptional | "
                   "concentric | mycielski")
      ->required();
  emit->add_option("--k", k, "chain length");
  emit->add_option("--l", l, "ring / cycle length");
  emit->add_option("--depth", depth, "concentric layer count");
  emit->add_option("--class", cls, "exceptional class E0..E5");
  emit->add_option("--spokes", spokes_arg, "spoke positions p1,p2,...");

  auto* enumerate = share_flags(app.add_subcommand("enumerate", "search for critical graphs"));
  std::string topo = "disk", rings_arg;
  int internal = 0;
  bool no_induced = false, punctured = false, naive = false;
  enumerate->add_option("--topology", topo, "disk | cylinder")
      ->check(CLI::IsMember({"disk", "cylinder"}));
  enumerate->add_option("--ring,--rings", rings_arg, "ring lengths l or l1,l2")
      ->required();
  enumerate->add_option("--internal", internal, "internal vertex budget")
      ->required();
  enumerate->add_option("--girth", l, "contractible girth floor (default 5)");
  enumerate->add_flag("--no-induced-ring", no_induced, "allow ring chords");
  enumerate->add_flag("--punctured", punctured,
                      "one ring; second cuff disjoint from the graph");
  enumerate->add_flag("--naive", naive, "use the generate-and-filter oracle");

  auto* verify = share_flags(app.add_subcommand("verify", "run a named suite (or `all`)"));
  std::string suite;
  std::vector<std::string> budget_args;
  verify->add_option("suite", suite)->required();
  verify->add_option("--budget", budget_args, "override key=value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*color) return cmd_color(file, phi_arg, as_json, out);
    if (*critical) return cmd_critical(file, as_json, out);
    if (*weigh) return cmd_weigh(file, as_json, out);
    if (*classify) return cmd_classify_cycle(file, cyc, as_json, out);
    if (*emit) {
      std::string doc;
      if (kind == "chain")
        doc = emit_document(make_chain(k, ChainEmbedding::abstract_planar).G);
      else if (kind == "klein-chain")
        doc = emit_document(make_chain(k, ChainEmbedding::canonical_klein).G);
      else if (kind == "broken-chain")
        doc = emit_document(make_chain(k, ChainEmbedding::broken_cylinder).G);
      else if (kind == "exceptional") {
        static const std::map<std::string, ExceptionalClass> classes = {
            {"E0", ExceptionalClass::E0}, {"E1", ExceptionalClass::E1},
            {"E2", ExceptionalClass::E2}, {"E3", ExceptionalClass::E3},
            {"E4", ExceptionalClass::E4}, {"E5", ExceptionalClass::E5}};
        auto it = classes.find(cls);
        if (it == classes.end())
          throw CLI::ValidationError("--class", "expected E0..E5");
        doc = emit_document(make_exceptional(it->second, l));
      } else if (kind == "concentric") {
        std::vector<int> spokes;
        std::stringstream ss(spokes_arg);
        std::string item;
        while (std::getline(ss, item, ',')) spokes.push_back(std::stoi(item));
        doc = emit_document(make_concentric(l, depth, spokes));
      } else if (kind == "mycielski") {
        doc = emit_document(make_mycielski(l));
      } else {
        throw CLI::ValidationError("kind", "unknown catalog kind " + kind);
      }
      write_out(out, doc);
      return 0;
    }
    if (*enumerate) {
      SearchSpec spec;
      spec.topology = topo == "disk" ? SearchSpec::disk : SearchSpec::cylinder;
      std::stringstream ss(rings_arg);
      std::string item;
      spec.ring_lengths.clear();
      while (std::getline(ss, item, ','))
        spec.ring_lengths.push_back(std::stoi(item));
      spec.max_internal = internal;
      spec.girth_floor = enumerate->count("--girth") ? l : 5;
      spec.induced_ring = !no_induced;
      spec.punctured = punctured;
      if (punctured) spec.topology = SearchSpec::cylinder;
      return cmd_enumerate(spec, naive, as_json, out);
    }
    if (*verify) return cmd_verify(suite, parse_budget(budget_args), as_json, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
