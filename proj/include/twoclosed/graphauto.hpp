#pragma once

// Automorphism groups and canonical forms of vertex- and arc-coloured
// digraphs by individualization and refinement.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "twoclosed/orbitals.hpp"
#include "twoclosed/permgroup.hpp"

namespace twoclosed {

/// Stored densely: arc_color(v, w) for every ordered pair, 0 meaning no arc.
class ColoredDigraph {
 public:
  /// Total pair colouring, row-major. Throws std::invalid_argument on size
  /// mismatch.
  static ColoredDigraph from_dense(std::size_t n, std::vector<std::uint32_t> pair_colors,
                                   std::vector<std::uint32_t> vertex_colors = {});
  /// Arc colours default to 1 and must be positive. Throws ValidationError on
  /// duplicate or out-of-range arcs.
  static ColoredDigraph from_arcs(std::size_t n, const std::vector<std::pair<Point, Point>>& arcs,
                                  const std::vector<std::uint32_t>& arc_colors = {},
                                  std::vector<std::uint32_t> vertex_colors = {});
  static ColoredDigraph from_digraph(const Digraph& d, std::vector<std::uint32_t> vertex_colors = {});

  std::size_t n() const { return n_; }
  std::uint32_t vertex_color(Point v) const { return vcol_[v]; }
  std::uint32_t arc_color(Point v, Point w) const { return m_[v * n_ + w]; }
  const std::vector<std::uint32_t>& vertex_colors() const { return vcol_; }
  const std::vector<std::uint32_t>& matrix() const { return m_; }

  bool is_automorphism(const Permutation& g) const;
  /// The digraph with vertex v renamed g[v].
  ColoredDigraph relabel(const Permutation& g) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> vcol_;
  std::vector<std::uint32_t> m_;
};

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t leaves = 0;
  std::size_t generators = 0;
};

PermGroup automorphism_group(const ColoredDigraph& g, SearchStats* stats = nullptr);

struct CanonicalForm {
  /// labeling[v] is the canonical name of vertex v.
  Permutation labeling;
  /// Vertex colours then the arc-colour matrix of the relabelled digraph.
  std::vector<std::uint32_t> certificate;
};

CanonicalForm canonical_form(const ColoredDigraph& g, SearchStats* stats = nullptr);
/// Uses an already computed automorphism group (its base must be the first
/// path of the search, as returned by automorphism_group).
CanonicalForm canonical_form(const ColoredDigraph& g, const PermGroup& aut, SearchStats* stats = nullptr);

struct IsomorphismResult {
  bool isomorphic = false;
  /// Maps vertices of the first digraph onto the second.
  std::optional<Permutation> witness;
};

IsomorphismResult is_isomorphic(const ColoredDigraph& a, const ColoredDigraph& b);

}  // namespace twoclosed
