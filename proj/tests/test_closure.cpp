#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "twoclosed/closure.hpp"
#include "twoclosed/constructions.hpp"
#include "twoclosed/errors.hpp"
#include "twoclosed/graphauto.hpp"

using namespace twoclosed;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> c) { return Permutation::from_cycles(n, c); }

// Number of permutations of S_n preserving every orbit on pairs.
std::size_t brute_closure_order(const PermGroup& g) {
  const std::size_t n = g.degree();
  auto pairs = brute_force_pair_orbits(g);
  std::vector<Point> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) ok = pairs[x * n + y] == pairs[p[x] * n + p[y]];
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

std::set<Permutation> enumerate(const PermGroup& g) {
  std::set<Permutation> seen{Permutation::identity(g.degree())};
  std::vector<Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& s : g.generators()) {
        auto y = x * s;
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

std::vector<PermGroup> corpus() {
  std::vector<PermGroup> out;
  out.push_back(PermGroup::generate(4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})}));
  out.push_back(PermGroup::generate(4, {cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})}));
  out.push_back(PermGroup::generate(5, {cyc(5, {{0, 1, 2, 3, 4}})}));
  out.push_back(PermGroup::generate(5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{1, 4}, {2, 3}})}));
  out.push_back(PermGroup::generate(6, {cyc(6, {{0, 1, 2, 3, 4, 5}})}));
  out.push_back(PermGroup::generate(6, {cyc(6, {{0, 1, 2, 3, 4, 5}}), cyc(6, {{1, 5}, {2, 4}})}));
  out.push_back(PermGroup::generate(6, {cyc(6, {{0, 1, 2}, {3, 4, 5}}), cyc(6, {{0, 3}, {1, 5}, {2, 4}})}));
  out.push_back(PermGroup::generate(6, {cyc(6, {{0, 1, 2, 3, 4}}), cyc(6, {{0, 5}, {1, 4}})}));
  out.push_back(PermGroup::generate(6, {cyc(6, {{0, 1}, {2, 3}, {4, 5}}), cyc(6, {{0, 2, 4}, {1, 3, 5}})}));
  return out;
}

}  // namespace

TEST_CASE("closure order against brute force over S_n") {
  for (const auto& g : corpus()) {
    auto c = two_closure(g);
    CHECK(c.order() == Order(brute_closure_order(g)));
    for (const auto& s : g.generators()) CHECK(c.contains(s));
    CHECK(is_two_closed(g) == (c.order() == g.order()));
  }
}

TEST_CASE("closure idempotent and preserves suborbits") {
  for (const auto& g : corpus()) {
    auto c = two_closure(g);
    CHECK(two_closure(c).order() == c.order());
    auto a = decompose(g), b = decompose(c);
    REQUIRE(a.rank() == b.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) {
      auto x = a.suborbits[i], y = b.suborbits[i];
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      CHECK(x == y);
    }
  }
}

TEST_CASE("named small cases") {
  auto v4 = PermGroup::generate(4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  CHECK(is_two_closed(v4));
  auto r = is_digraph_autgroup(v4, AutgroupMode::Exhaustive);
  CHECK(r.two_closed);
  CHECK_FALSE(r.is_autgroup);
  CHECK_FALSE(r.witness);
  CHECK(r.tested.size() == 4);
  auto rs = is_digraph_autgroup(v4, AutgroupMode::Rank4Shortcut);
  CHECK_FALSE(rs.is_autgroup);
  CHECK(rs.tested.size() == 3);

  auto a4 = PermGroup::generate(4, {cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})});
  CHECK_FALSE(is_two_closed(a4));
  CHECK(two_closure(a4).order() == 24);
  CHECK_FALSE(is_digraph_autgroup(a4, AutgroupMode::Exhaustive).is_autgroup);

  auto s5 = PermGroup::generate(5, {cyc(5, {{0, 1}}), cyc(5, {{0, 1, 2, 3, 4}})});
  CHECK(two_closure(s5).order() == 120);
  auto e = is_digraph_autgroup(s5, AutgroupMode::Exhaustive);
  CHECK(e.is_autgroup);
  REQUIRE(e.witness);
  CHECK(*e.witness == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(is_digraph_autgroup(s5, AutgroupMode::Rank4Shortcut), PreconditionError);

  auto c5 = PermGroup::generate(5, {cyc(5, {{0, 1, 2, 3, 4}})});
  auto ec = is_digraph_autgroup(c5, AutgroupMode::Exhaustive);
  CHECK(ec.two_closed);
  CHECK(ec.is_autgroup);

  auto two = PermGroup::generate(5, {cyc(5, {{0, 1}})});
  CHECK_THROWS_AS(two_closure(two), PreconditionError);
}

TEST_CASE("regular groups are 2-closed") {
  for (std::size_t n = 2; n <= 12; ++n) {
    std::vector<std::vector<Point>> c(1);
    for (Point i = 0; i < n; ++i) c[0].push_back(i);
    CHECK(is_two_closed(PermGroup::generate(n, {cyc(n, c)})));
  }
  auto v8 = affine_group(2, 3, {});
  CHECK(v8.is_regular());
  CHECK(is_two_closed(v8));
  auto v9 = affine_group(3, 2, {});
  CHECK(is_two_closed(v9));
}

TEST_CASE("rank-4 base groups against enumeration of Aut(Gamma_1)") {
  for (auto [p, d, m1, e, s] : {std::tuple{5u, 2u, 1ull, 1ll, 1ull}, std::tuple{2u, 6u, 1ull, 0ll, 1ull}}) {
    auto c = rank4_gammaL1(p, d, m1, e, s);
    const auto& g = c.group;
    auto dec = decompose(g);
    REQUIRE(dec.rank() == 4);
    auto colors = pair_coloring(g, dec);
    const std::size_t n = g.degree();
    auto aut1 = orbital_union_autgroup(n, colors, {1});
    auto closure = two_closure(g);
    CHECK(closure.order() > 0);
    for (const auto& x : closure.generators()) CHECK(aut1.contains(x));
    if (n > 25) continue;
    // Elements of Aut(Gamma_1) that also preserve Gamma_2 form the closure.
    std::size_t preserving = 0;
    for (const auto& x : enumerate(aut1)) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a)
        for (std::size_t b = 0; b < n && ok; ++b)
          ok = (colors[a * n + b] == 2) == (colors[x[a] * n + x[b]] == 2);
      preserving += ok;
    }
    CHECK(Order(preserving) == closure.order());
    CHECK(aut1.order() > closure.order());
  }
}

TEST_CASE("report invariants") {
  auto g = family_G(2).group;
  ClosureOptions opts;
  opts.check_autgroup = true;
  opts.threads = 2;
  auto r = closure_report(g, opts);
  CHECK(r.input_order == 15552);
  CHECK(r.closure_order == 15552);
  CHECK(r.is_two_closed);
  CHECK(r.rank == 4);
  CHECK(r.closure_in_orbital_auts);
  REQUIRE(r.digraph_autgroup);
  CHECK_FALSE(*r.digraph_autgroup);
  for (const auto& o : r.orbital_aut_orders) CHECK(o % r.closure_order == 0);
  auto j = to_json(r);
  CHECK(j["closure_order"] == "15552");
  CHECK(j["mode"] == "rank4");
  auto r1 = closure_report(g, {true, AutgroupMode::Rank4Shortcut, 1});
  CHECK(to_json(r1) == j);
}

TEST_CASE("parallel_for visits every index once") {
  std::vector<int> hits(100, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
}
