#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twoclosed/perm.hpp"

namespace twoclosed {

using Order = boost::multiprecision::cpp_int;

/// Seed of the random Schreier-Sims phase; every run uses it so results are
/// bit-reproducible.
inline constexpr std::uint64_t kSchreierSimsSeed = 0x5eed2c105edULL;

struct GroupOptions {
  /// Exact order when known from elsewhere (e.g. an automorphism search).
  /// The random phase then stops as soon as it is reached and the
  /// deterministic verification is skipped.
  std::optional<Order> known_order;
  /// Leading base points.
  std::vector<Point> base_prefix;
};

/// A permutation group with a base and strong generating set. Basic
/// transversals are kept as Schreier vectors.
class PermGroup {
 public:
  PermGroup() = default;

  /// Runs randomized Schreier-Sims followed by a deterministic verification
  /// pass. Throws std::invalid_argument on degree mismatch.
  static PermGroup generate(std::size_t degree, std::vector<Permutation> gens,
                            const GroupOptions& opts = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const Order& order() const { return order_; }

  const std::vector<Point>& base() const { return base_; }
  const std::vector<Permutation>& strong_generators() const { return strong_; }
  std::vector<std::size_t> basic_orbit_lengths() const;
  const std::vector<Point>& basic_orbit(std::size_t level) const { return levels_[level].orbit; }

  bool contains(const Permutation& g) const;

  std::vector<Point> orbit(Point x) const;
  std::vector<std::vector<Point>> orbits() const;
  PermGroup stabilizer(Point x) const;
  /// Pointwise stabilizer of a sequence of points.
  PermGroup pointwise_stabilizer(const std::vector<Point>& points) const;

  bool is_transitive() const;
  bool is_regular() const;
  /// Higman's criterion: every non-trivial orbital digraph is weakly
  /// connected. Throws PreconditionError when intransitive.
  bool is_primitive() const;

  PermGroup conjugate(const Permutation& g) const;
  PermGroup closure_with(const std::vector<Permutation>& extra) const;

  /// Same group rebuilt with `prefix` as the leading base points.
  PermGroup with_base(const std::vector<Point>& prefix) const;

  /// For every point y in the orbit of x, an element mapping x to y
  /// (empty Permutation for points outside the orbit).
  std::vector<Permutation> orbit_transversal(Point x) const;

  /// Uniformly-ish random element from the product-replacement generator.
  /// Deterministic for a fixed seed.
  std::vector<Permutation> random_elements(std::size_t count, std::uint64_t seed) const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<std::size_t> gens;  // indices into strong_
    std::vector<std::int32_t> schreier;  // -1 outside orbit, -2 root, else strong_ index
    std::vector<Point> orbit;
  };

  struct SiftResult {
    Permutation residue;
    std::size_t level;  // level where sifting stopped (== levels_.size() if passed)
  };

  SiftResult sift(Permutation g, std::size_t from_level = 0) const;
  void rebuild_orbit(std::size_t level);
  void add_strong(const Permutation& g, std::size_t level);
  void schreier_sims(const GroupOptions& opts);
  bool verify();
  Order product_of_orbits() const;
  void finalize();

  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> strong_;
  std::vector<Permutation> strong_inv_;
  std::vector<Level> levels_;
  std::vector<Point> base_;
  Order order_ = 1;
};

/// Minimal block system in which a and b share a block (union-find over
/// pair fusions under the generators). Returns a block label per point.
std::vector<Point> minimal_block_system(const PermGroup& g, Point a, Point b);

/// Orbits on ordered pairs computed by brute force; returns the number of
/// pair orbits (the rank for a transitive group).
std::size_t pair_orbit_count(const PermGroup& g);

}  // namespace twoclosed
