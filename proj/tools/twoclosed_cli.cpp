#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "twoclosed/closure.hpp"
#include "twoclosed/descriptor.hpp"
#include "twoclosed/errors.hpp"
#include "twoclosed/graphauto.hpp"
#include "twoclosed/orbitals.hpp"
#include "twoclosed/tables.hpp"
#include "twoclosed/verify.hpp"

using nlohmann::json;
using namespace twoclosed;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitPrecondition = 3;

struct RunConfig {
  std::uint64_t bound = kDefaultDegreeBound;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  std::string format = "json";

  json to_json() const { return {{"bound", bound}, {"threads", threads}, {"seed", seed}, {"format", format}}; }
};

unsigned default_threads() {
  if (const char* s = std::getenv("TWOCLOSED_THREADS")) {
    try {
      auto v = std::stoul(s);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw ValidationError("TWOCLOSED_THREADS must be a positive integer");
  }
  return 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

// Flattened text rendering of a JSON report.
void render_text(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && j.front().is_structured()) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const json& j, const RunConfig& cfg) {
  if (cfg.format == "text")
    render_text(j, "", std::cout);
  else
    std::cout << j.dump(2) << "\n";
}

/// A group named by a descriptor file, a group JSON file, or --family with
/// parameter flags.
struct GroupSource {
  std::string file;
  std::string family;
  std::map<std::string, std::int64_t> ints;
  std::string name;
  std::vector<std::pair<std::string, CLI::Option*>> int_opts;

  void add_to(CLI::App* app) {
    app->add_option("file", file, "Descriptor or group JSON file");
    app->add_option("--family", family, "G, H, rank4-gammal1, gammal1, agl, tensor-gl, gl-wreath or catalog");
    for (const char* k : {"p", "d", "q", "m", "m1", "e", "s"})
      int_opts.emplace_back(k, app->add_option(std::string("--") + k, ints[k], std::string("Parameter ") + k));
    app->add_option("--name", name, "Catalog entry");
  }

  GroupDescriptor descriptor() const {
    if (!file.empty() && !family.empty()) throw ValidationError("give either a file or --family, not both");
    if (!file.empty()) {
      auto j = parse_json_file(file);
      if (j.is_object() && j.contains("descriptor")) return parse_descriptor(j["descriptor"]);
      return parse_descriptor(j);
    }
    if (family.empty()) throw ValidationError("no group given: pass a descriptor file or --family");
    static const std::map<std::string, std::string> kinds{
        {"g", "family-G"},           {"h", "family-H"},        {"rank4-gammal1", "rank4-gammaL1"},
        {"gammal1", "gammaL1"},      {"agl", "agl"},           {"tensor-gl", "tensor-gl"},
        {"gl-wreath", "gl-wreath"},  {"catalog", "catalog"}};
    std::string key = family;
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
    auto it = kinds.find(key);
    if (it == kinds.end()) throw ValidationError("unknown family \"" + family + "\"");
    json params = json::object();
    for (const auto& [k, opt] : int_opts)
      if (opt->count()) params[k] = ints.at(k);
    if (!name.empty()) params["name"] = name;
    return parse_descriptor(json{{"kind", it->second}, {"params", params}});
  }
};

std::size_t weak_components(const Digraph& d) {
  std::vector<Point> parent(d.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<Point(Point)> find = [&](Point x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::size_t comps = d.n;
  for (auto [a, b] : d.arcs) {
    auto x = find(a), y = find(b);
    if (x != y) {
      parent[x] = y;
      --comps;
    }
  }
  return comps;
}

Digraph orbital_union(const PermGroup& g, const OrbitalDecomposition& dec, const std::vector<std::size_t>& idx) {
  Digraph u;
  u.n = g.degree();
  for (auto i : idx) {
    if (i == 0 || i >= dec.rank()) throw ValidationError("orbital index " + std::to_string(i) + " out of range");
    auto d = orbital_digraph(g, dec, i);
    u.arcs.insert(u.arcs.end(), d.arcs.begin(), d.arcs.end());
  }
  std::sort(u.arcs.begin(), u.arcs.end());
  u.arcs.erase(std::unique(u.arcs.begin(), u.arcs.end()), u.arcs.end());
  u.is_graph = std::all_of(u.arcs.begin(), u.arcs.end(),
                           [&](auto a) { return std::binary_search(u.arcs.begin(), u.arcs.end(), std::pair{a.second, a.first}); });
  return u;
}

void write_digraph(const Digraph& d, const std::string& format, std::ostream& out) {
  if (format == "edge-list")
    out << to_edge_list(d);
  else if (format == "dimacs")
    out << to_dimacs(d);
  else
    throw ValidationError("unknown emit format \"" + format + "\"");
}

json header(const std::string& command, const RunConfig& cfg, const GroupDescriptor* d) {
  json j{{"command", command}, {"config", cfg.to_json()}};
  if (d) {
    j["descriptor"] = to_json(*d);
    j["descriptor_hash"] = descriptor_hash(*d);
  }
  return j;
}

json analyze_report(const PermGroup& g) {
  if (!g.is_transitive()) throw PreconditionError("analyze: the group is not transitive");
  auto dec = decompose(g);
  json orbitals = json::array();
  bool primitive = true;
  for (std::size_t i = 1; i < dec.rank(); ++i) {
    auto d = orbital_digraph(g, dec, i);
    auto comps = weak_components(d);
    primitive = primitive && comps == 1;
    orbitals.push_back({{"index", i},
                        {"subdegree", dec.subdegrees[i]},
                        {"paired_with", dec.pairing[i]},
                        {"self_paired", dec.pairing[i] == i},
                        {"arcs", d.arcs.size()},
                        {"components", comps},
                        {"connected", comps == 1}});
  }
  return {{"degree", g.degree()},
          {"order", g.order().str()},
          {"rank", dec.rank()},
          {"subdegrees", dec.subdegrees},
          {"pairing", dec.pairing},
          {"primitive", primitive},
          {"orbitals", orbitals}};
}

std::vector<std::size_t> parse_index_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      auto v = std::stoul(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError("bad orbital index \"" + tok + "\"");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbitals, 2-closures and automorphism groups of affine permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--bound", cfg.bound, "Degree bound")->capture_default_str();
  auto* threads_opt = app.add_option("--threads", cfg.threads, "Worker threads (default $TWOCLOSED_THREADS or 1)");
  app.add_option("--seed", cfg.seed, "Seed for randomized steps")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  auto* construct = app.add_subcommand("construct", "Build a group and print its generators");
  GroupSource construct_src;
  construct_src.add_to(construct);

  auto* analyze = app.add_subcommand("analyze", "Rank, subdegrees, pairing and primitivity");
  GroupSource analyze_src;
  analyze_src.add_to(analyze);
  std::string emit_format;
  std::size_t emit_orbital = 1;
  analyze->add_option("--emit", emit_format, "Print an orbital digraph instead (edge-list or dimacs)");
  analyze->add_option("--orbital", emit_orbital, "Orbital index for --emit")->capture_default_str();

  auto* closure = app.add_subcommand("closure", "2-closure and the digraph automorphism group test");
  GroupSource closure_src;
  closure_src.add_to(closure);
  bool check_autgroup = false, exhaustive = false;
  std::string witness_path;
  closure->add_flag("--check-autgroup", check_autgroup, "Decide whether G is Aut of a (generalized) orbital digraph");
  closure->add_flag("--exhaustive", exhaustive, "Test every union of orbitals instead of the rank-4 shortcut");
  closure->add_option("--emit-witness", witness_path, "Write the witness digraph (edge-list) to this path");

  auto* autgroup = app.add_subcommand("autgroup", "Automorphism group of a digraph");
  GroupSource autgroup_src;
  autgroup_src.add_to(autgroup);
  std::string orbitals_arg, edge_list_path;
  autgroup->add_option("--orbitals", orbitals_arg, "Comma-separated orbital indices of the group");
  autgroup->add_option("--edge-list", edge_list_path, "Digraph in edge-list format instead of a group");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suites;
  verify->add_option("--suite", suites, "families, tables, catalog, properties or all")->required();

  auto* tables = app.add_subcommand("tables", "Rank-3 subdegree data");
  tables->require_subcommand(1);
  auto* dump = tables->add_subcommand("dump", "Print the class A, B and C data");
  std::string dump_format = "json";
  dump->add_option("--format", dump_format)->check(CLI::IsMember({"json"}))->capture_default_str();
  auto* row = tables->add_subcommand("row", "Evaluate one class A row");
  std::string row_type;
  Table1Params row_params{.p = 0, .d = 0, .q = 0, .m = 0, .a = 0, .eps = 1, .v = 0};
  row->add_option("--type", row_type, "A1..A11")->required();
  row->add_option("--p", row_params.p);
  row->add_option("--d", row_params.d);
  row->add_option("--q", row_params.q);
  row->add_option("--m", row_params.m);
  row->add_option("--a", row_params.a);
  row->add_option("--eps", row_params.eps);
  row->add_option("--v", row_params.v);
  auto* sweep = tables->add_subcommand("sweep", "Check every class A row up to a degree");
  std::uint64_t sweep_max = 100000000;
  sweep->add_option("--max", sweep_max)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  auto progress = [](const std::string& msg) { std::cerr << "[twoclosed] " << msg << std::endl; };

  try {
    if (!threads_opt->count()) cfg.threads = default_threads();
    if (cfg.threads == 0) throw ValidationError("--threads must be positive");

    if (*construct) {
      auto d = construct_src.descriptor();
      auto c = build(d, cfg.bound);
      auto j = group_json(c, d);
      j["config"] = cfg.to_json();
      emit(j, cfg);
      return 0;
    }
    if (*analyze) {
      auto d = analyze_src.descriptor();
      auto c = build(d, cfg.bound);
      if (!emit_format.empty()) {
        if (!c.group.is_transitive()) throw PreconditionError("analyze: the group is not transitive");
        auto dec = decompose(c.group);
        if (emit_orbital == 0 || emit_orbital >= dec.rank())
          throw ValidationError("orbital index " + std::to_string(emit_orbital) + " out of range");
        write_digraph(orbital_digraph(c.group, dec, emit_orbital), emit_format, std::cout);
        return 0;
      }
      auto j = header("analyze", cfg, &d);
      j["analysis"] = analyze_report(c.group);
      emit(j, cfg);
      return 0;
    }
    if (*closure) {
      auto d = closure_src.descriptor();
      auto c = build(d, cfg.bound);
      if (c.group.degree() >= 729) progress("closure of a group of degree " + std::to_string(c.group.degree()));
      ClosureOptions opts;
      opts.check_autgroup = check_autgroup || exhaustive;
      opts.mode = exhaustive ? AutgroupMode::Exhaustive : AutgroupMode::Rank4Shortcut;
      opts.threads = cfg.threads;
      auto rep = closure_report(c.group, opts);
      if (!witness_path.empty()) {
        if (!rep.witness) throw PreconditionError("no witness digraph: the group is not the automorphism group of one");
        auto dec = decompose(c.group);
        std::ofstream out(witness_path);
        if (!out) throw ValidationError("cannot write " + witness_path);
        write_digraph(orbital_union(c.group, dec, *rep.witness), "edge-list", out);
      }
      auto j = header("closure", cfg, &d);
      j["report"] = to_json(rep);
      emit(j, cfg);
      return 0;
    }
    if (*autgroup) {
      json j;
      ColoredDigraph g = ColoredDigraph::from_arcs(0, {});
      if (!edge_list_path.empty()) {
        g = ColoredDigraph::from_digraph(parse_edge_list(read_file(edge_list_path)));
        j = header("autgroup", cfg, nullptr);
        j["input"] = edge_list_path;
      } else {
        auto d = autgroup_src.descriptor();
        auto c = build(d, cfg.bound);
        if (!c.group.is_transitive()) throw PreconditionError("autgroup: the group is not transitive");
        auto dec = decompose(c.group);
        auto idx = orbitals_arg.empty() ? std::vector<std::size_t>{1} : parse_index_list(orbitals_arg);
        g = ColoredDigraph::from_digraph(orbital_union(c.group, dec, idx));
        j = header("autgroup", cfg, &d);
        j["orbitals"] = idx;
      }
      SearchStats stats;
      auto a = automorphism_group(g, &stats);
      json gens = json::array();
      for (const auto& x : a.generators()) gens.push_back(x.images());
      j["vertices"] = g.n();
      j["order"] = a.order().str();
      j["generators"] = gens;
      j["search"] = {{"nodes", stats.nodes}, {"leaves", stats.leaves}};
      emit(j, cfg);
      return 0;
    }
    if (*verify) {
      std::vector<std::string> names;
      for (const auto& s : suites) {
        if (s == "all") {
          auto all = suite_names();
          names.insert(names.end(), all.begin(), all.end());
        } else {
          names.push_back(s);
        }
      }
      auto known = suite_names();
      for (const auto& s : names)
        if (std::find(known.begin(), known.end(), s) == known.end()) throw ValidationError("unknown suite \"" + s + "\"");
      SuiteOptions opts;
      opts.threads = cfg.threads;
      opts.progress = progress;
      std::vector<CheckResult> results;
      for (const auto& s : names) {
        progress("suite " + s);
        auto r = run_suite(s, opts);
        results.insert(results.end(), r.begin(), r.end());
      }
      auto j = header("verify", cfg, nullptr);
      j["suites"] = names;
      j["results"] = to_json(results);
      emit(j, cfg);
      return j["results"]["failed"].get<std::size_t>() == 0 ? 0 : kExitFailure;
    }
    if (*tables) {
      if (*dump) {
        auto j = header("tables dump", cfg, nullptr);
        j["tables"] = tables_json();
        std::cout << j.dump(2) << "\n";
        return 0;
      }
      if (*row) {
        auto pair = table1_subdegrees(parse_table1_type(row_type), row_params);
        auto j = header("tables row", cfg, nullptr);
        j["row"] = {{"tag", pair.tag}, {"degree", pair.degree}, {"m1", pair.m1}, {"m2", pair.m2}, {"params", pair.params}};
        emit(j, cfg);
        return 0;
      }
      if (*sweep) {
        progress("class A sweep to " + std::to_string(sweep_max));
        auto rep = sweep_table1(sweep_max);
        json rows = json::array();
        for (const auto& r : rep.rows)
          rows.push_back({{"tag", r.tag},
                          {"instances", r.instances},
                          {"sum_failures", r.sum_failures},
                          {"larger_failures", r.larger_failures},
                          {"exceptions", r.exceptions}});
        auto j = header("tables sweep", cfg, nullptr);
        j["max"] = sweep_max;
        j["rows"] = rows;
        j["exceptional"] = rep.exceptional.size();
        j["ok"] = rep.ok();
        emit(j, cfg);
        return rep.ok() ? 0 : kExitFailure;
      }
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitValidation;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << std::endl;
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << std::endl;
    return kExitFailure;
  }
  return 0;
}
