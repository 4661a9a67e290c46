#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twoclosed/permgroup.hpp"

namespace twoclosed {

struct OrbitalDecomposition {
  std::size_t degree = 0;
  Point base_point = 0;
  /// Orbits of the point stabilizer, sorted by (length, least point).
  /// Suborbit 0 is {base_point}.
  std::vector<std::vector<Point>> suborbits;
  std::vector<std::size_t> subdegrees;
  std::vector<std::size_t> pairing;
  /// Suborbit index of every point.
  std::vector<std::uint32_t> label;

  std::size_t rank() const { return suborbits.size(); }
};

struct Digraph {
  std::size_t n = 0;
  std::vector<std::pair<Point, Point>> arcs;  // sorted, no duplicates
  bool is_graph = false;

  friend bool operator==(const Digraph&, const Digraph&) = default;
};

/// Throws PreconditionError when G is intransitive.
OrbitalDecomposition decompose(const PermGroup& g, Point alpha = 0);

/// An element of G mapping `from` to `to`; throws std::invalid_argument when
/// they lie in different orbits.
Permutation element_mapping(const PermGroup& g, Point from, Point to);

/// Orbital index of every ordered pair, row-major (x * n + y). The diagonal
/// is colour 0.
std::vector<std::uint32_t> pair_coloring(const PermGroup& g, const OrbitalDecomposition& dec);

/// Throws std::out_of_range for i = 0 or i >= rank.
Digraph orbital_digraph(const PermGroup& g, const OrbitalDecomposition& dec, std::size_t i);
/// Throws std::out_of_range for an empty or out-of-range index set.
Digraph generalized_orbital_digraph(const PermGroup& g, const OrbitalDecomposition& dec,
                                    const std::vector<std::size_t>& indices);
Digraph digraph_from_coloring(std::size_t n, const std::vector<std::uint32_t>& colors,
                              const std::vector<std::size_t>& indices);

bool self_paired_check(const OrbitalDecomposition& dec, std::size_t i);

/// Header "n m", then one arc "u v" per line.
std::string to_edge_list(const Digraph& d);
/// "p edge n m" header, then "a u v" lines with 1-based vertices.
std::string to_dimacs(const Digraph& d);
/// Parses the edge-list format. Throws ValidationError on malformed input.
Digraph parse_edge_list(const std::string& text);

/// Orbits of G on ordered pairs by brute force, as a row-major label array.
/// Labels are arbitrary but consistent.
std::vector<std::uint32_t> brute_force_pair_orbits(const PermGroup& g);

}  // namespace twoclosed
