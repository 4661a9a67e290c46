#pragma once

// Serializable recipes for every constructible group.
//
//   {"kind": "family-G", "params": {"m": 2}}
//
// Kinds and their parameters are listed in docs/descriptors.md.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "twoclosed/constructions.hpp"

namespace twoclosed {

struct GroupDescriptor {
  std::string kind;
  nlohmann::json params = nlohmann::json::object();
};

std::vector<std::string> descriptor_kinds();

/// Checks the kind, the parameter names and their types. Throws
/// ValidationError naming the offending field.
GroupDescriptor parse_descriptor(const nlohmann::json& j);
nlohmann::json to_json(const GroupDescriptor& d);

/// FNV-1a 64 of the compact canonical JSON, as 16 hex digits.
std::string descriptor_hash(const GroupDescriptor& d);

/// Throws ValidationError when the parameters fail the construction's
/// arithmetic conditions or the degree exceeds the bound.
Construction build(const GroupDescriptor& d, std::uint64_t bound = kDefaultDegreeBound);

/// Degree, order, generators (image lists) and the descriptor with its hash.
nlohmann::json group_json(const Construction& c, const GroupDescriptor& d);

}  // namespace twoclosed
