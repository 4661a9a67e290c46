#include "doctest.h"

#include <map>
#include <set>

#include "twoclosed/constructions.hpp"
#include "twoclosed/errors.hpp"
#include "twoclosed/graphauto.hpp"
#include "twoclosed/orbitals.hpp"

using namespace twoclosed;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> c) { return Permutation::from_cycles(n, c); }

void check_decomposition(const PermGroup& g) {
  auto dec = decompose(g);
  std::size_t total = 0;
  for (auto s : dec.subdegrees) total += s;
  CHECK(total == g.degree());
  CHECK(dec.suborbits[0] == std::vector<Point>{0});
  CHECK(dec.pairing[0] == 0);
  for (std::size_t i = 0; i < dec.rank(); ++i) {
    CHECK(dec.pairing[dec.pairing[i]] == i);
    CHECK(dec.subdegrees[dec.pairing[i]] == dec.subdegrees[i]);
  }
  // The colouring agrees with the brute-force orbits on pairs.
  auto colors = pair_coloring(g, dec);
  auto brute = brute_force_pair_orbits(g);
  std::map<std::uint32_t, std::uint32_t> fwd, back;
  for (std::size_t k = 0; k < colors.size(); ++k) {
    auto [it, fresh] = fwd.emplace(colors[k], brute[k]);
    CHECK(it->second == brute[k]);
    auto [jt, fresh2] = back.emplace(brute[k], colors[k]);
    CHECK(jt->second == colors[k]);
  }
  CHECK(fwd.size() == dec.rank());
  CHECK(pair_orbit_count(g) == dec.rank());
  // Pairing read off the colouring: colour(y, x) is the pair of colour(x, y).
  const std::size_t n = g.degree();
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y) CHECK(colors[y * n + x] == dec.pairing[colors[x * n + y]]);
}

}  // namespace

TEST_CASE("small decompositions") {
  auto s4 = PermGroup::generate(4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})});
  auto dec = decompose(s4);
  CHECK(dec.subdegrees == std::vector<std::size_t>{1, 3});
  auto c3 = PermGroup::generate(3, {cyc(3, {{0, 1, 2}})});
  auto d3 = decompose(c3);
  CHECK_FALSE(self_paired_check(d3, 1));
  auto v4 = PermGroup::generate(4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  auto dv = decompose(v4);
  for (std::size_t i = 0; i < dv.rank(); ++i) CHECK(self_paired_check(dv, i));
  auto two = PermGroup::generate(5, {cyc(5, {{0, 1}})});
  CHECK_THROWS_AS(decompose(two), PreconditionError);
}

TEST_CASE("pair colouring matches brute force for n <= 30") {
  std::vector<PermGroup> corpus{
      PermGroup::generate(5, {cyc(5, {{0, 1, 2, 3, 4}})}),
      PermGroup::generate(6, {cyc(6, {{0, 1, 2, 3, 4, 5}}), cyc(6, {{1, 5}, {2, 4}})}),
      PermGroup::generate(7, {cyc(7, {{0, 1, 2, 3, 4, 5, 6}}), cyc(7, {{1, 2, 4}, {3, 6, 5}})}),
      PermGroup::generate(9, {cyc(9, {{0, 1, 2}}), cyc(9, {{3, 4, 5}}), cyc(9, {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}})}),
      rank4_gammaL1(5, 2, 1, 1, 1).group,
      affine_group({MatrixGFp(5, 2, 2, {0, 1, 4, 0})}),
  };
  for (const auto& g : corpus) check_decomposition(g);
}

TEST_CASE("orbital digraphs") {
  auto c5 = PermGroup::generate(5, {cyc(5, {{0, 1, 2, 3, 4}})});
  auto dec = decompose(c5);
  std::size_t i = dec.label[1];
  auto d = orbital_digraph(c5, dec, i);
  CHECK_FALSE(d.is_graph);
  CHECK(d.arcs.size() == 5);
  CHECK(automorphism_group(ColoredDigraph::from_digraph(d)).order() == 5);
  CHECK_THROWS_AS(orbital_digraph(c5, dec, 0), std::out_of_range);
  CHECK_THROWS_AS(orbital_digraph(c5, dec, 5), std::out_of_range);
  CHECK_THROWS_AS(generalized_orbital_digraph(c5, dec, {}), std::out_of_range);
  auto all = generalized_orbital_digraph(c5, dec, {1, 2, 3, 4});
  CHECK(all.arcs.size() == 20);
  CHECK(all.is_graph);
}

TEST_CASE("rank 3 complement") {
  // AGL_1(9)-type group: translations plus multiplication by w^2 has rank 3.
  auto f = make_field(3, 2);
  std::vector<Point> im(9);
  for (Point x = 0; x < 9; ++x) im[x] = f->mul(x, f->omega_pow(2));
  auto g = affine_group(3, 2, {Permutation(im)});
  auto dec = decompose(g);
  REQUIRE(dec.rank() == 3);
  auto a = orbital_digraph(g, dec, 1), b = orbital_digraph(g, dec, 2);
  CHECK(a.arcs.size() + b.arcs.size() == 72);
  std::set<std::pair<Point, Point>> sa(a.arcs.begin(), a.arcs.end());
  for (auto arc : b.arcs) CHECK(sa.count(arc) == 0);
}

TEST_CASE("family G(2) orbitals") {
  auto c = family_G(2);
  auto dec = decompose(c.group);
  CHECK(dec.subdegrees == std::vector<std::size_t>{1, 16, 16, 48});
  for (std::size_t i = 0; i < dec.rank(); ++i) CHECK(self_paired_check(dec, i));
  std::size_t b1 = dec.label[c.labels[0].second], b2 = dec.label[c.labels[1].second];
  CHECK(b1 != b2);
  auto u = generalized_orbital_digraph(c.group, dec, {b1, b2});
  CHECK(u.arcs.size() == 81 * 32);
  CHECK(u.is_graph);
  auto h = orbital_digraph(c.group, dec, b1);
  CHECK(is_isomorphic(ColoredDigraph::from_digraph(h), ColoredDigraph::from_digraph(hamming_graph(9))).isomorphic);
  // Every generator maps arcs to arcs.
  std::set<std::pair<Point, Point>> arcs(h.arcs.begin(), h.arcs.end());
  for (const auto& s : c.group.generators())
    for (auto [x, y] : h.arcs) REQUIRE(arcs.count({s[x], s[y]}) == 1);
}

TEST_CASE("family H(2) orbitals") {
  auto c = family_H(2);
  auto dec = decompose(c.group);
  CHECK(dec.subdegrees == std::vector<std::size_t>{1, 30, 45, 180});
  CHECK(orbital_digraph(c.group, dec, 2).arcs.size() == 11520);
}

TEST_CASE("edge-list round trip") {
  auto h = hamming_graph(3);
  CHECK(parse_edge_list(to_edge_list(h)) == h);
  CHECK(to_dimacs(h).rfind("p edge 9 36\n", 0) == 0);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 5\n"), ValidationError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n0 1\n"), ValidationError);
  CHECK_THROWS_AS(parse_edge_list("x"), ValidationError);
}

TEST_CASE("suborbits of imprimitive-stabilizer constructions have length divisible by |V1| - 1") {
  // Stabilizers preserving V = V1 + V2: GL_m(p) wr C2.
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 2}, {2, 3}, {5, 1}, {2, 2}, {3, 1}}) {
    std::vector<MatrixGFp> stab;
    for (const auto& g : gl_generators(p, m)) stab.push_back(direct_sum(g, MatrixGFp::identity(p, m)));
    auto im = MatrixGFp::identity(p, m);
    MatrixGFp swap(p, 2 * m, 2 * m);
    for (unsigned i = 0; i < m; ++i) {
      swap.at(i, m + i) = 1;
      swap.at(m + i, i) = 1;
    }
    stab.push_back(swap);
    auto g = affine_group(stab);
    auto dec = decompose(g);
    std::size_t v1 = ipow(p, m) - 1;
    for (std::size_t i = 1; i < dec.rank(); ++i) CHECK(dec.subdegrees[i] % v1 == 0);
  }
}
