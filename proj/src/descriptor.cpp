#include "twoclosed/descriptor.hpp"

#include <cstdio>
#include <map>

#include "twoclosed/errors.hpp"

namespace twoclosed {

namespace {

using nlohmann::json;

enum class Param { Int, SignedInt, String, Matrices, Images };

const std::map<std::string, std::map<std::string, Param>>& schema() {
  static const std::map<std::string, std::map<std::string, Param>> s{
      {"permutations", {{"degree", Param::Int}, {"generators", Param::Images}}},
      {"affine-matrix", {{"p", Param::Int}, {"d", Param::Int}, {"matrices", Param::Matrices}}},
      {"agl", {{"p", Param::Int}, {"d", Param::Int}}},
      {"gammaL1", {{"p", Param::Int}, {"d", Param::Int}, {"m", Param::Int}, {"e", Param::SignedInt}, {"s", Param::Int}}},
      {"rank4-gammaL1",
       {{"p", Param::Int}, {"d", Param::Int}, {"m1", Param::Int}, {"e", Param::SignedInt}, {"s", Param::Int}}},
      {"family-G", {{"m", Param::Int}}},
      {"family-H", {{"m", Param::Int}}},
      {"tensor-gl", {{"q", Param::Int}, {"m", Param::Int}}},
      {"gl-wreath", {{"p", Param::Int}, {"m", Param::Int}}},
      {"catalog", {{"name", Param::String}}},
  };
  return s;
}

bool is_uint_list(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<std::int64_t>() >= 0)) return false;
  return true;
}

void check_param(const std::string& kind, const std::string& name, Param type, const json& v) {
  auto bad = [&](const char* what) {
    throw ValidationError("descriptor " + kind + ": parameter \"" + name + "\" must be " + what);
  };
  switch (type) {
    case Param::Int:
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) bad("a non-negative integer");
      break;
    case Param::SignedInt:
      if (!v.is_number_integer()) bad("an integer");
      break;
    case Param::String:
      if (!v.is_string()) bad("a string");
      break;
    case Param::Matrices:
    case Param::Images:
      if (!v.is_array()) bad("a list of integer lists");
      for (const auto& row : v)
        if (!is_uint_list(row)) bad("a list of integer lists");
      break;
  }
}

std::uint32_t u32(const json& p, const char* k) {
  auto v = p.at(k).get<std::uint64_t>();
  if (v > 0xffffffffu) throw ValidationError(std::string("descriptor: parameter \"") + k + "\" too large");
  return static_cast<std::uint32_t>(v);
}

void check_degree(std::uint32_t p, std::uint32_t d, std::uint64_t bound) {
  if (!is_prime(p)) throw ValidationError("descriptor: p = " + std::to_string(p) + " is not prime");
  if (d < 1) throw ValidationError("descriptor: d must be positive");
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    n *= p;
    if (n > bound) throw ValidationError("descriptor: degree exceeds the bound " + std::to_string(bound));
  }
}

}  // namespace

std::vector<std::string> descriptor_kinds() {
  std::vector<std::string> out;
  for (const auto& [k, v] : schema()) out.push_back(k);
  return out;
}

GroupDescriptor parse_descriptor(const json& j) {
  if (!j.is_object()) throw ValidationError("descriptor must be a JSON object");
  for (const auto& [k, v] : j.items())
    if (k != "kind" && k != "params") throw ValidationError("descriptor: unknown field \"" + k + "\"");
  if (!j.contains("kind") || !j["kind"].is_string()) throw ValidationError("descriptor: missing string field \"kind\"");
  GroupDescriptor d;
  d.kind = j["kind"].get<std::string>();
  auto it = schema().find(d.kind);
  if (it == schema().end()) throw ValidationError("descriptor: unknown kind \"" + d.kind + "\"");
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw ValidationError("descriptor: \"params\" must be an object");
    d.params = j["params"];
  }
  for (const auto& [k, v] : d.params.items())
    if (!it->second.count(k)) throw ValidationError("descriptor " + d.kind + ": unknown parameter \"" + k + "\"");
  for (const auto& [name, type] : it->second) {
    if (!d.params.contains(name)) throw ValidationError("descriptor " + d.kind + ": missing parameter \"" + name + "\"");
    check_param(d.kind, name, type, d.params[name]);
  }
  return d;
}

json to_json(const GroupDescriptor& d) { return json{{"kind", d.kind}, {"params", d.params}}; }

std::string descriptor_hash(const GroupDescriptor& d) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : to_json(d).dump()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Construction build(const GroupDescriptor& desc, std::uint64_t bound) {
  const auto d = parse_descriptor(to_json(desc));
  const json& p = d.params;
  const std::string& k = d.kind;
  if (k == "permutations") {
    auto n = p["degree"].get<std::uint64_t>();
    if (n == 0 || n > bound) throw ValidationError("descriptor permutations: degree must be in 1.." + std::to_string(bound));
    std::vector<Permutation> gens;
    for (const auto& g : p["generators"]) {
      auto im = g.get<std::vector<Point>>();
      if (im.size() != n) throw ValidationError("descriptor permutations: generator of wrong length");
      try {
        gens.emplace_back(std::move(im));
      } catch (const std::invalid_argument&) {
        throw ValidationError("descriptor permutations: generator is not a bijection");
      }
    }
    Construction c;
    c.name = "permutation group";
    c.group = PermGroup::generate(n, std::move(gens));
    c.expected_stabilizer_order = c.group.is_transitive() ? c.group.order() / n : Order(0);
    return c;
  }
  if (k == "affine-matrix" || k == "agl") {
    std::uint32_t q = u32(p, "p"), dim = u32(p, "d");
    check_degree(q, dim, bound);
    std::vector<MatrixGFp> mats;
    if (k == "agl") {
      mats = gl_generators(q, dim);
    } else {
      for (const auto& m : p["matrices"]) {
        auto e = m.get<std::vector<std::uint32_t>>();
        if (e.size() != std::size_t{dim} * dim)
          throw ValidationError("descriptor affine-matrix: each matrix needs d*d entries");
        for (auto x : e)
          if (x >= q) throw ValidationError("descriptor affine-matrix: entries must be below p");
        mats.emplace_back(q, dim, dim, std::move(e));
      }
    }
    Construction c;
    c.name = k == "agl" ? "AGL" + std::to_string(dim) + "(" + std::to_string(q) + ")" : "affine group";
    if (mats.empty()) {
      c.group = affine_group(q, dim, {});
    } else {
      try {
        c.group = affine_group(mats);
      } catch (const std::domain_error& e) {
        throw ValidationError(std::string("descriptor affine-matrix: ") + e.what());
      }
    }
    c.expected_stabilizer_order = c.group.order() / c.group.degree();
    return c;
  }
  if (k == "gammaL1") {
    std::uint32_t q = u32(p, "p"), dim = u32(p, "d");
    check_degree(q, dim, bound);
    auto h = gammaL1_subgroup(q, dim, p["m"].get<std::uint64_t>(), p["e"].get<std::int64_t>(), p["s"].get<std::uint64_t>());
    Construction c;
    c.name = "gammaL1 subgroup";
    c.group = affine_group(q, dim, {h.mult, h.semi});
    c.expected_stabilizer_order = h.order;
    return c;
  }
  if (k == "rank4-gammaL1") {
    std::uint32_t q = u32(p, "p"), dim = u32(p, "d");
    check_degree(q, dim, bound);
    return rank4_gammaL1(q, dim, p["m1"].get<std::uint64_t>(), p["e"].get<std::int64_t>(), p["s"].get<std::uint64_t>());
  }
  if (k == "family-G") return family_G(u32(p, "m"), bound);
  if (k == "family-H") return family_H(u32(p, "m"), bound);
  if (k == "tensor-gl") return tensor_gl(u32(p, "q"), u32(p, "m"), bound);
  if (k == "gl-wreath") return gl_wreath(u32(p, "p"), u32(p, "m"), bound);
  if (k == "catalog") {
    auto name = p["name"].get<std::string>();
    auto c = catalog(name);
    if (c.group.degree() > bound) throw ValidationError("descriptor catalog: degree exceeds the bound");
    return c;
  }
  throw ValidationError("descriptor: unknown kind \"" + k + "\"");
}

json group_json(const Construction& c, const GroupDescriptor& d) {
  json gens = json::array();
  for (const auto& g : c.group.generators()) gens.push_back(g.images());
  json labels = json::object();
  for (const auto& [name, pt] : c.labels) labels[name] = pt;
  return json{{"descriptor", to_json(d)},
              {"descriptor_hash", descriptor_hash(d)},
              {"name", c.name},
              {"degree", c.group.degree()},
              {"order", c.group.order().str()},
              {"expected_stabilizer_order", c.expected_stabilizer_order.str()},
              {"labels", labels},
              {"generators", gens}};
}

}  // namespace twoclosed
