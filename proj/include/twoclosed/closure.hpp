#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "twoclosed/orbitals.hpp"
#include "twoclosed/permgroup.hpp"

namespace twoclosed {

/// Automorphism group of the orbital colouring of Omega x Omega. Throws
/// PreconditionError for intransitive input.
PermGroup two_closure(const PermGroup& g);
bool is_two_closed(const PermGroup& g);

enum class AutgroupMode { Rank4Shortcut, Exhaustive };

struct AutgroupResult {
  bool two_closed = false;
  bool is_autgroup = false;
  /// First index set S with Aut of the union of the orbitals in S equal to G.
  std::optional<std::vector<std::size_t>> witness;
  /// Index sets tested and the order of the automorphism group of each.
  std::vector<std::pair<std::vector<std::size_t>, Order>> tested;
};

/// Throws PreconditionError when G is intransitive, when the shortcut is
/// asked for on a group of rank other than 4, or when exhaustive mode would
/// exceed 2^20 index sets.
AutgroupResult is_digraph_autgroup(const PermGroup& g, AutgroupMode mode, unsigned threads = 1);

struct ClosureReport {
  Order input_order;
  Order closure_order;
  bool is_two_closed = false;
  std::size_t rank = 0;
  std::vector<std::size_t> subdegrees;
  /// |Aut(Gamma_i)| for i = 1..rank-1.
  std::vector<Order> orbital_aut_orders;
  /// Every closure generator is an automorphism of every orbital digraph.
  bool closure_in_orbital_auts = false;
  std::optional<AutgroupMode> mode;
  std::optional<bool> digraph_autgroup;
  std::optional<std::vector<std::size_t>> witness;
};

struct ClosureOptions {
  bool check_autgroup = false;
  AutgroupMode mode = AutgroupMode::Rank4Shortcut;
  unsigned threads = 1;
};

ClosureReport closure_report(const PermGroup& g, const ClosureOptions& opts = {});
nlohmann::json to_json(const ClosureReport& r);

/// The automorphism group of the union of the given orbitals.
PermGroup orbital_union_autgroup(std::size_t n, const std::vector<std::uint32_t>& colors,
                                 const std::vector<std::size_t>& indices);

/// Runs f(0), ..., f(count-1) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& f);

}  // namespace twoclosed
