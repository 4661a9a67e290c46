#include "doctest.h"

#include <set>

#include "twoclosed/errors.hpp"
#include "twoclosed/permgroup.hpp"

using namespace twoclosed;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> c) { return Permutation::from_cycles(n, c); }

// Closure of the generators by breadth-first multiplication.
std::set<Permutation> enumerate(std::size_t n, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> queue{Permutation::identity(n)};
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const auto& s : gens) {
      auto g = queue[h] * s;
      if (seen.insert(g).second) queue.push_back(g);
    }
  return seen;
}

}  // namespace

TEST_CASE("permutation basics") {
  auto a = cyc(4, {{0, 1}});
  auto b = cyc(4, {{0, 1, 2, 3}});
  CHECK((a * b)[0] == b[a[0]]);
  CHECK((b * b.inverse()).is_identity());
  CHECK(b.cycle_string() == "(0 1 2 3)");
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("orders of small groups") {
  CHECK(PermGroup::generate(4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})}).order() == 24);
  auto d5 = PermGroup::generate(5, {cyc(5, {{0, 1, 2, 3, 4}})}).closure_with({cyc(5, {{1, 4}, {2, 3}})});
  CHECK(d5.order() == 10);
  CHECK(PermGroup::generate(6, {}).order() == 1);
  std::vector<Permutation> m11{cyc(11, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}), cyc(11, {{2, 6, 10, 7}, {3, 9, 4, 5}})};
  CHECK(PermGroup::generate(11, m11).order() == 7920);
  CHECK_THROWS_AS(PermGroup::generate(3, {cyc(4, {{0, 1}})}), std::invalid_argument);
}

TEST_CASE("order and membership agree with enumeration") {
  std::vector<std::vector<Permutation>> cases{
      {cyc(8, {{0, 1, 2, 3, 4, 5, 6, 7}}), cyc(8, {{0, 1}})},
      {cyc(8, {{0, 1, 2}, {3, 4, 5}}), cyc(8, {{0, 3}, {1, 4}, {2, 5}}), cyc(8, {{6, 7}})},
      {cyc(7, {{0, 1, 2, 3, 4, 5, 6}}), cyc(7, {{1, 2, 4}, {3, 6, 5}})},
      {cyc(9, {{0, 1, 2}}), cyc(9, {{3, 4, 5}}), cyc(9, {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}})},
  };
  for (const auto& gens : cases) {
    std::size_t n = gens[0].degree();
    auto elems = enumerate(n, gens);
    auto g = PermGroup::generate(n, gens);
    CHECK(g.order() == elems.size());
    for (const auto& e : elems) CHECK(g.contains(e));
    auto t = cyc(n, {{0, static_cast<Point>(n - 1)}});
    CHECK(g.contains(t) == (elems.count(t) == 1));
  }
}

TEST_CASE("known order and base prefix") {
  std::vector<Permutation> s6{cyc(6, {{0, 1}}), cyc(6, {{0, 1, 2, 3, 4, 5}})};
  GroupOptions opts;
  opts.known_order = 720;
  opts.base_prefix = {5, 3};
  auto g = PermGroup::generate(6, s6, opts);
  CHECK(g.order() == 720);
  CHECK(g.base()[0] == 5);
  CHECK(g.base()[1] == 3);
}

TEST_CASE("stabilizers") {
  std::vector<Permutation> s6{cyc(6, {{0, 1}}), cyc(6, {{0, 1, 2, 3, 4, 5}})};
  auto g = PermGroup::generate(6, s6);
  auto h = g.stabilizer(4);
  CHECK(h.order() == 120);
  for (const auto& s : h.generators()) CHECK(s[4] == 4);
  CHECK(g.pointwise_stabilizer({2, 0, 5}).order() == 6);
  auto k = g.stabilizer(g.base()[0]);
  CHECK(k.order() == 120);
  CHECK(k.contains(cyc(6, {{1, 2, 3}})) == (g.base()[0] != 1 && g.base()[0] != 2 && g.base()[0] != 3));
}

TEST_CASE("orbits, transitivity, regularity") {
  auto c6 = PermGroup::generate(6, {cyc(6, {{0, 1, 2, 3, 4, 5}})});
  CHECK(c6.is_transitive());
  CHECK(c6.is_regular());
  CHECK_FALSE(c6.is_primitive());
  auto two = PermGroup::generate(6, {cyc(6, {{0, 1, 2}}), cyc(6, {{3, 4}})});
  CHECK(two.orbits().size() == 3);
  CHECK_FALSE(two.is_transitive());
  CHECK_THROWS_AS(two.is_primitive(), PreconditionError);
  CHECK(PermGroup::generate(5, {cyc(5, {{0, 1, 2, 3, 4}})}).is_primitive());
  auto t = c6.orbit_transversal(0);
  for (Point y = 0; y < 6; ++y) CHECK(t[y][0] == y);
}

TEST_CASE("primitivity agrees with minimal block systems") {
  std::vector<std::vector<Permutation>> cases{
      {cyc(6, {{0, 1, 2, 3, 4, 5}}), cyc(6, {{1, 5}, {2, 4}})},
      {cyc(8, {{0, 1, 2, 3, 4, 5, 6, 7}}), cyc(8, {{0, 1}})},
      {cyc(9, {{0, 1, 2}}), cyc(9, {{3, 4, 5}}), cyc(9, {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}})},
      {cyc(7, {{0, 1, 2, 3, 4, 5, 6}}), cyc(7, {{1, 2, 4}, {3, 6, 5}})},
      {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})},
  };
  for (const auto& gens : cases) {
    auto g = PermGroup::generate(gens[0].degree(), gens);
    bool all_trivial = true;
    for (Point b = 1; b < g.degree(); ++b) {
      auto lab = minimal_block_system(g, 0, b);
      all_trivial = all_trivial && std::set<Point>(lab.begin(), lab.end()).size() == 1;
    }
    CHECK(g.is_primitive() == all_trivial);
  }
}

TEST_CASE("conjugation preserves order") {
  std::vector<Permutation> gens{cyc(7, {{0, 1, 2, 3, 4, 5, 6}}), cyc(7, {{1, 2, 4}, {3, 6, 5}})};
  auto g = PermGroup::generate(7, gens);
  auto x = cyc(7, {{0, 3}, {2, 6}});
  auto h = g.conjugate(x);
  CHECK(h.order() == 21);
  CHECK(h.contains(x.inverse() * gens[0] * x));
}

TEST_CASE("pair orbit count is the rank") {
  auto s5 = PermGroup::generate(5, {cyc(5, {{0, 1}}), cyc(5, {{0, 1, 2, 3, 4}})});
  CHECK(pair_orbit_count(s5) == 2);
  auto c5 = PermGroup::generate(5, {cyc(5, {{0, 1, 2, 3, 4}})});
  CHECK(pair_orbit_count(c5) == 5);
}
