#include "doctest.h"

#include <random>
#include <set>

#include "twoclosed/errors.hpp"
#include "twoclosed/graphauto.hpp"

using namespace twoclosed;

namespace {

using Arcs = std::vector<std::pair<Point, Point>>;

Arcs undirected(const std::vector<std::pair<Point, Point>>& edges) {
  Arcs a;
  for (auto [x, y] : edges) {
    a.emplace_back(x, y);
    a.emplace_back(y, x);
  }
  return a;
}

ColoredDigraph complete(std::size_t n) {
  Arcs a;
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y)
      if (x != y) a.emplace_back(x, y);
  return ColoredDigraph::from_arcs(n, a);
}

ColoredDigraph cycle(std::size_t n, bool directed) {
  Arcs a;
  for (Point x = 0; x < n; ++x) {
    a.emplace_back(x, (x + 1) % n);
    if (!directed) a.emplace_back((x + 1) % n, x);
  }
  return ColoredDigraph::from_arcs(n, a);
}

// H(d,k): vertices are words of length d over k letters, adjacent when they
// differ in one position.
ColoredDigraph hamming(unsigned d, unsigned k) {
  std::size_t n = 1;
  for (unsigned i = 0; i < d; ++i) n *= k;
  Arcs a;
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y) {
      unsigned diff = 0;
      for (unsigned i = 0, u = x, v = y; i < d; ++i, u /= k, v /= k) diff += (u % k) != (v % k);
      if (diff == 1) a.emplace_back(x, y);
    }
  return ColoredDigraph::from_arcs(n, a);
}

std::size_t brute_force_count(const ColoredDigraph& g) {
  std::vector<Point> im(g.n());
  for (Point i = 0; i < g.n(); ++i) im[i] = i;
  std::size_t count = 0;
  do count += g.is_automorphism(Permutation(im));
  while (std::next_permutation(im.begin(), im.end()));
  return count;
}

Permutation random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Point> im(n);
  for (Point i = 0; i < n; ++i) im[i] = i;
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(im);
}

ColoredDigraph random_digraph(std::size_t n, std::mt19937& rng, unsigned colors, double density) {
  std::vector<std::uint32_t> m(n * n, 0), vc(n);
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<std::uint32_t> c(1, colors);
  for (auto& x : m)
    if (u(rng) < density) x = c(rng);
  for (auto& x : vc) x = c(rng) % 2;
  return ColoredDigraph::from_dense(n, m, vc);
}

void check_generators(const ColoredDigraph& g, const PermGroup& aut) {
  for (const auto& s : aut.generators()) CHECK(g.is_automorphism(s));
}

}  // namespace

TEST_CASE("known automorphism groups") {
  auto k5 = automorphism_group(complete(5));
  CHECK(k5.order() == 120);
  auto h23 = automorphism_group(hamming(2, 3));
  CHECK(h23.order() == 72);
  check_generators(hamming(2, 3), h23);
  CHECK(automorphism_group(cycle(5, true)).order() == 5);
  CHECK(automorphism_group(cycle(5, false)).order() == 10);
  CHECK(automorphism_group(hamming(3, 2)).order() == 48);
  auto petersen = ColoredDigraph::from_arcs(
      10, undirected({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}}));
  CHECK(automorphism_group(petersen).order() == 120);
  // S_k wr S_d has order (k!)^d d!.
  CHECK(automorphism_group(hamming(2, 5)).order() == 120 * 120 * 2);
  CHECK(automorphism_group(hamming(3, 3)).order() == 6 * 6 * 6 * 6);
  CHECK(automorphism_group(hamming(2, 9)).order() == Order(362880) * 362880 * 2);
}

TEST_CASE("empty and edgeless digraphs") {
  CHECK(automorphism_group(ColoredDigraph::from_arcs(1, {})).order() == 1);
  CHECK(automorphism_group(ColoredDigraph::from_arcs(6, {})).order() == 720);
  CHECK_THROWS_AS(ColoredDigraph::from_arcs(3, {{0, 1}, {0, 1}}), ValidationError);
  CHECK_THROWS_AS(ColoredDigraph::from_arcs(3, {{0, 3}}), ValidationError);
}

TEST_CASE("automorphism group order matches brute force for n <= 8") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 3 + t % 6;
    auto g = random_digraph(n, rng, 1 + t % 3, t % 2 ? 0.5 : 0.3);
    auto aut = automorphism_group(g);
    CHECK(aut.order() == brute_force_count(g));
    check_generators(g, aut);
  }
  // Symmetric inputs exercise the orbit pruning.
  for (std::size_t n = 3; n <= 8; ++n) {
    CHECK(automorphism_group(cycle(n, false)).order() == brute_force_count(cycle(n, false)));
    CHECK(automorphism_group(cycle(n, true)).order() == n);
  }
  CHECK(automorphism_group(hamming(3, 2)).order() == brute_force_count(hamming(3, 2)));
}

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937 rng(99);
  std::vector<ColoredDigraph> corpus{hamming(2, 3), hamming(2, 4), cycle(7, true), cycle(8, false),
                                     random_digraph(12, rng, 2, 0.4), random_digraph(9, rng, 1, 0.5)};
  for (const auto& g : corpus) {
    auto base = canonical_form(g).certificate;
    for (int k = 0; k < 100; ++k) {
      auto h = g.relabel(random_perm(g.n(), rng));
      REQUIRE(canonical_form(h).certificate == base);
    }
  }
}

TEST_CASE("isomorphism") {
  CHECK(is_isomorphic(hamming(2, 4), hamming(2, 4)).isomorphic);
  CHECK_FALSE(is_isomorphic(cycle(5, true), cycle(5, false)).isomorphic);
  Arcs k44;
  for (Point x = 0; x < 4; ++x)
    for (Point y = 4; y < 8; ++y) {
      k44.emplace_back(x, y);
      k44.emplace_back(y, x);
    }
  CHECK_FALSE(is_isomorphic(hamming(2, 4), ColoredDigraph::from_arcs(8, k44)).isomorphic);
  CHECK_FALSE(is_isomorphic(hamming(2, 4), complete(16)).isomorphic);
  std::mt19937 rng(5);
  auto g = random_digraph(10, rng, 3, 0.5);
  auto h = g.relabel(random_perm(10, rng));
  auto r = is_isomorphic(g, h);
  REQUIRE(r.isomorphic);
  CHECK(g.relabel(*r.witness).matrix() == h.matrix());
}

TEST_CASE("refinement survives vertex colours") {
  auto g = hamming(2, 3);
  std::vector<std::uint32_t> vc(9, 0);
  vc[0] = 1;
  auto c = ColoredDigraph::from_dense(9, g.matrix(), vc);
  CHECK(automorphism_group(c).order() == 8);
}
