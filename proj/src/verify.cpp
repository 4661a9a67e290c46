#include "twoclosed/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>

#include "twoclosed/closure.hpp"
#include "twoclosed/constructions.hpp"
#include "twoclosed/errors.hpp"
#include "twoclosed/orbitals.hpp"
#include "twoclosed/tables.hpp"

namespace twoclosed {

namespace {

class Recorder {
 public:
  Recorder(std::string suite, const SuiteOptions& opts) : suite_(std::move(suite)), opts_(opts) {}

  void progress(const std::string& msg) const {
    if (opts_.progress) opts_.progress(msg);
  }

  /// Runs f, which returns (passed, detail); exceptions count as failures.
  void check(int criterion, const std::string& name, const std::string& provenance,
             const std::function<std::pair<bool, std::string>()>& f, bool extended = false) {
    CheckResult r{suite_, name, provenance, criterion, false, extended, "", 0};
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto [ok, detail] = f();
      r.passed = ok;
      r.detail = std::move(detail);
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }
  unsigned threads() const { return opts_.threads; }

 private:
  std::string suite_;
  const SuiteOptions& opts_;
  std::vector<CheckResult> results_;
};

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "[" + s + "]";
}

Order factorial(std::uint64_t k) {
  Order r = 1;
  for (std::uint64_t i = 2; i <= k; ++i) r *= i;
  return r;
}

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> c) { return Permutation::from_cycles(n, c); }

ColoredDigraph graph_of(const Digraph& d) { return ColoredDigraph::from_digraph(d); }

bool generators_in(const PermGroup& g, const PermGroup& h) {
  return std::all_of(g.generators().begin(), g.generators().end(), [&](const auto& x) { return h.contains(x); });
}

bool witness_ok(const IsomorphismResult& r, const ColoredDigraph& a, const ColoredDigraph& b) {
  return r.isomorphic && r.witness && a.relabel(*r.witness).matrix() == b.matrix();
}

// Suborbit index with the given subdegree, in order of appearance.
std::vector<std::size_t> with_subdegree(const OrbitalDecomposition& dec, std::size_t len) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < dec.rank(); ++i)
    if (dec.subdegrees[i] == len) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------- families

void family_g_checks(Recorder& rec, unsigned m) {
  const int crit = 1;
  const std::string tag = "G(" + std::to_string(m) + ")";
  rec.progress("constructing " + tag);
  auto c = family_G(m);
  const auto& g = c.group;
  const std::uint64_t k = ipow(3, m);
  const std::size_t n = g.degree();

  rec.check(crit, tag + " order is 3^(2m) * 4|GL_m(3)|", "STATED", [&] {
    return std::pair{g.order() == Order(n) * c.expected_stabilizer_order, g.order().str()};
  });
  rec.check(crit, tag + " transitive and primitive", "STATED",
            [&] { return std::pair{g.is_transitive() && g.is_primitive(), std::string()}; });
  auto dec = decompose(g);
  rec.check(crit, tag + " rank 4 with subdegrees 1, 2(3^m-1), 2(3^m-1), rest", "DERIVED", [&] {
    std::vector<std::size_t> want{1, 2 * (k - 1), 2 * (k - 1), n - 1 - 4 * (k - 1)};
    std::sort(want.begin(), want.end());
    auto got = dec.subdegrees;
    std::sort(got.begin(), got.end());
    return std::pair{dec.rank() == 4 && got == want, join(dec.subdegrees)};
  });
  rec.progress(tag + ": 2-closure");
  auto closure = two_closure(g);
  rec.check(crit, tag + " is 2-closed", "STATED",
            [&] { return std::pair{closure.order() == g.order(), closure.order().str()}; });
  rec.progress(tag + ": orbital automorphism groups");
  rec.check(crit, tag + " is not the automorphism group of a graph or digraph", "STATED", [&] {
    auto r = is_digraph_autgroup(g, AutgroupMode::Rank4Shortcut, rec.threads());
    std::string d;
    for (const auto& [s, o] : r.tested) d += (d.empty() ? "" : " ") + o.str();
    return std::pair{r.two_closed && !r.is_autgroup, "orbital Aut orders " + d};
  });

  const std::size_t b1 = dec.label[1], b2 = dec.label[1 + k];
  auto g1 = orbital_digraph(g, dec, b1), g2 = orbital_digraph(g, dec, b2);
  auto ham = hamming_graph(static_cast<std::uint32_t>(k));
  const Order wreath = factorial(k) * factorial(k) * 2;
  rec.check(crit, tag + " orbital graph B1 is H(2,3^m) on the V1 x V2 coordinates", "STATED",
            [&] { return std::pair{g1.arcs == ham.arcs && g1.is_graph, std::to_string(g1.arcs.size()) + " arcs"}; });
  auto cg1 = graph_of(g1), cg2 = graph_of(g2), ch = graph_of(ham);
  auto wgens = hamming_wreath_generators(static_cast<std::uint32_t>(k));
  rec.check(crit, tag + " S_k wr S_2 generators act on B1 and generate (k!)^2 * 2", "STATED", [&] {
    bool autos = std::all_of(wgens.begin(), wgens.end(), [&](const auto& x) { return cg1.is_automorphism(x); });
    auto w = PermGroup::generate(n, wgens);
    return std::pair{autos && w.order() == wreath, w.order().str()};
  });
  rec.progress(tag + ": Aut(B1), Aut(B2)");
  auto a1 = automorphism_group(cg1);
  rec.check(crit, tag + " |Aut(B1)| = ((3^m)!)^2 * 2 and contains the wreath generators", "STATED", [&] {
    bool members = std::all_of(wgens.begin(), wgens.end(), [&](const auto& x) { return a1.contains(x); });
    return std::pair{members && a1.order() == wreath && generators_in(g, a1), a1.order().str()};
  });
  rec.check(crit, tag + " orbital graph B2 is isomorphic to H(2,3^m)", "STATED", [&] {
    auto r = is_isomorphic(cg2, ch);
    return std::pair{witness_ok(r, cg2, ch), std::string(r.isomorphic ? "witness verified" : "not isomorphic")};
  });
  if (m == 2) {
    rec.check(crit, tag + " |Aut(B2)| = (9!)^2 * 2", "STATED", [&] {
      auto a2 = automorphism_group(cg2);
      return std::pair{a2.order() == wreath && generators_in(g, a2), a2.order().str()};
    });
  }
}

void family_h_checks(Recorder& rec) {
  const int crit = 2;
  rec.progress("constructing H(2)");
  auto c = family_H(2);
  const auto& g = c.group;
  rec.check(crit, "H(2) order is 256 * 12|GL_2(4)|", "STATED",
            [&] { return std::pair{g.order() == Order(256) * 2160, g.order().str()}; });
  rec.check(crit, "H(2) transitive and primitive", "STATED",
            [&] { return std::pair{g.is_transitive() && g.is_primitive(), std::string()}; });
  auto dec = decompose(g);
  rec.check(crit, "H(2) rank 4 with subdegrees {1,30,45,180}", "DERIVED", [&] {
    return std::pair{dec.subdegrees == std::vector<std::size_t>{1, 30, 45, 180}, join(dec.subdegrees)};
  });
  rec.progress("H(2): 2-closure");
  rec.check(crit, "H(2) is 2-closed", "STATED", [&] {
    auto cl = two_closure(g);
    return std::pair{cl.order() == g.order(), cl.order().str()};
  });
  rec.check(crit, "H(2) is not the automorphism group of a graph or digraph", "STATED", [&] {
    auto r = is_digraph_autgroup(g, AutgroupMode::Rank4Shortcut, rec.threads());
    std::string d;
    for (const auto& [s, o] : r.tested) d += (d.empty() ? "" : " ") + o.str();
    return std::pair{r.two_closed && !r.is_autgroup, "orbital Aut orders " + d};
  });
  rec.check(crit, "H(2) 30-valent orbital graph is isomorphic to H(2,16)", "STATED", [&] {
    auto idx = with_subdegree(dec, 30);
    if (idx.size() != 1) return std::pair{false, std::string("no unique 30-valent suborbit")};
    auto a = graph_of(orbital_digraph(g, dec, idx[0])), b = graph_of(hamming_graph(16));
    auto r = is_isomorphic(a, b);
    return std::pair{witness_ok(r, a, b), std::string("witness verified")};
  });
}

void rank4_checks(Recorder& rec, std::uint32_t p, unsigned d, std::uint64_t m1, std::int64_t e, std::uint64_t s) {
  const int crit = 3;
  const std::string tag = "G(" + std::to_string(p) + "^" + std::to_string(d) + "," + std::to_string(m1) + "," +
                          std::to_string(e) + "," + std::to_string(s) + ")";
  auto c = rank4_gammaL1(p, d, m1, e, s);
  const auto& g = c.group;
  const std::size_t len = (g.degree() - 1) / 3;
  rec.check(crit, tag + " base group is primitive", "STATED",
            [&] { return std::pair{g.is_primitive(), g.order().str()}; });
  auto dec = decompose(g);
  rec.check(crit, tag + " three suborbits of length (p^d-1)/3", "STATED", [&] {
    return std::pair{dec.subdegrees == std::vector<std::size_t>{1, len, len, len}, join(dec.subdegrees)};
  });
  std::vector<ColoredDigraph> gammas;
  for (std::size_t i = 1; i < dec.rank(); ++i) gammas.push_back(graph_of(orbital_digraph(g, dec, i)));
  rec.check(crit, tag + " orbital digraphs pairwise isomorphic", "STATED", [&] {
    if (gammas.size() != 3) return std::pair{false, std::string("rank is not 4")};
    bool ok = true;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) ok = ok && witness_ok(is_isomorphic(gammas[i], gammas[j]), gammas[i], gammas[j]);
    return std::pair{ok, std::string()};
  });
  auto closure = two_closure(g);
  rec.check(crit, tag + " each Aut(Gamma_i) strictly contains the 2-closure", "STATED", [&] {
    bool ok = gammas.size() == 3;
    std::string detail = "closure " + closure.order().str() + "; Aut";
    for (const auto& gm : gammas) {
      auto a = automorphism_group(gm);
      ok = ok && generators_in(closure, a) && a.order() > closure.order();
      detail += " " + a.order().str();
    }
    return std::pair{ok, detail};
  });
}

// ----------------------------------------------------------------- catalog

std::vector<ColoredDigraph> orbital_graphs(const PermGroup& g, const OrbitalDecomposition& dec) {
  std::vector<ColoredDigraph> out;
  for (std::size_t i = 1; i < dec.rank(); ++i) out.push_back(graph_of(orbital_digraph(g, dec, i)));
  return out;
}

Permutation mult_by(const Field& f, std::int64_t m) {
  std::vector<Point> im(f->card());
  for (Point x = 0; x < f->card(); ++x) im[x] = f->mul(x, f->omega_pow(m));
  return Permutation(im);
}

// p^d : <w^m, w^e a^s>, or p^d : <w^m> when s = 0.
PermGroup semilinear_affine(std::uint32_t p, unsigned d, std::int64_t m, std::int64_t e, std::uint64_t s) {
  Field f = make_field(p, d);
  std::vector<Permutation> gens{mult_by(f, m)};
  if (s > 0) gens.push_back(gammaL1_element(f, e, s));
  return affine_group(p, d, gens);
}

void catalog_checks(Recorder& rec) {
  const int crit = 4;
  {
    auto g = catalog("49-16").group;
    auto dec = decompose(g);
    rec.check(crit, "49-16 subdegrees {1,12,12,24}", "STATED", [&] {
      return std::pair{dec.subdegrees == std::vector<std::size_t>{1, 12, 12, 24}, join(dec.subdegrees)};
    });
    auto graphs = orbital_graphs(g, dec);
    auto h7 = graph_of(hamming_graph(7));
    rec.check(crit, "49-16 exactly two orbital graphs isomorphic to H(2,7)", "STATED", [&] {
      std::size_t count = 0;
      for (const auto& x : graphs) count += is_isomorphic(x, h7).isomorphic;
      return std::pair{count == 2, std::to_string(count)};
    });
    rec.check(crit, "49-16 24-valent graph has Aut = 7^2:<w^2,a> of order 49*48", "STATED", [&] {
      auto idx = with_subdegree(dec, 24);
      if (idx.size() != 1) return std::pair{false, std::string("no unique 24-valent suborbit")};
      auto a = automorphism_group(graphs[idx[0] - 1]);
      auto built = semilinear_affine(7, 2, 2, 0, 1);
      return std::pair{a.order() == 2352 && built.order() == 2352 && generators_in(built, a), a.order().str()};
    });
    rec.check(crit, "49-16 is not the automorphism group of a graph or digraph", "STATED", [&] {
      auto r = is_digraph_autgroup(g, AutgroupMode::Rank4Shortcut, rec.threads());
      return std::pair{!r.is_autgroup, std::string(r.two_closed ? "2-closed" : "not 2-closed")};
    });
  }
  {
    auto g = catalog("81-48").group;
    auto dec = decompose(g);
    rec.check(crit, "81-48 orbital valencies {20,20,40}", "STATED", [&] {
      return std::pair{dec.subdegrees == std::vector<std::size_t>{1, 20, 20, 40}, join(dec.subdegrees)};
    });
    rec.check(crit, "81-48 40-valent graph has Aut = 3^4:<w^2,a>", "STATED", [&] {
      auto idx = with_subdegree(dec, 40);
      auto a = automorphism_group(graph_of(orbital_digraph(g, dec, idx.at(0))));
      auto built = semilinear_affine(3, 4, 2, 0, 1);
      return std::pair{a.order() == built.order() && generators_in(built, a), a.order().str()};
    });
  }
  {
    auto g = catalog("121-23").group;
    auto dec = decompose(g);
    rec.check(crit, "121-23 three suborbits of length 40", "STATED", [&] {
      return std::pair{dec.subdegrees == std::vector<std::size_t>{1, 40, 40, 40}, join(dec.subdegrees)};
    });
    rec.check(crit, "121-23 each orbital digraph has Aut of order 121*80", "STATED", [&] {
      bool ok = dec.rank() == 4;
      std::string detail;
      for (const auto& x : orbital_graphs(g, dec)) {
        auto a = automorphism_group(x);
        ok = ok && a.order() == 121 * 80 && generators_in(g, a);
        detail += (detail.empty() ? "" : " ") + a.order().str();
      }
      return std::pair{ok, detail};
    });
  }
  {
    rec.progress("2401-663");
    auto g = catalog("2401-663").group;
    auto dec = decompose(g);
    rec.check(crit, "2401-663 subdegrees {1,480,960,960}", "STATED", [&] {
      return std::pair{dec.subdegrees == std::vector<std::size_t>{1, 480, 960, 960}, join(dec.subdegrees)};
    }, true);
    rec.check(crit, "2401-663 480-valent graph Aut lies in AGammaL_1(7^4)", "STATED", [&] {
      auto idx = with_subdegree(dec, 480);
      auto a = automorphism_group(graph_of(orbital_digraph(g, dec, idx.at(0))));
      auto agaml = semilinear_affine(7, 4, 1, 0, 1);
      auto sub = semilinear_affine(7, 4, 5, 0, 1);
      bool in = generators_in(a, agaml);
      return std::pair{in && a.order() == sub.order() && generators_in(sub, a),
                       "|Aut| = " + a.order().str() + ", |AGammaL_1| = " + agaml.order().str()};
    }, true);
  }
}

// ------------------------------------------------------------------ tables

std::vector<std::size_t> nontrivial(const PermGroup& g) {
  auto s = decompose(g).subdegrees;
  std::vector<std::size_t> out(s.begin() + 1, s.end());
  std::sort(out.begin(), out.end());
  return out;
}

void table_checks(Recorder& rec) {
  const int crit = 5;
  rec.progress("class A sweep to 10^8");
  rec.check(crit, "class A formulas: m1 + m2 = p^d - 1 and the larger-subdegree dichotomy up to 10^8", "DERIVED", [&] {
    auto rep = sweep_table1();
    std::string d;
    bool nonempty = true;
    for (const auto& r : rep.rows) {
      d += r.tag + ":" + std::to_string(r.instances) + " ";
      nonempty = nonempty && r.instances > 0;
    }
    d += "exceptions:" + std::to_string(rep.exceptional.size());
    return std::pair{rep.ok() && nonempty && !rep.exceptional.empty(), d};
  });
  rec.check(crit, "class A examples", "STATED", [&] {
    auto a3 = table1_subdegrees(Table1Type::A3, {.q = 4, .m = 2});
    auto a7 = table1_subdegrees(Table1Type::A7, {.q = 2, .a = 3, .eps = -1});
    auto a2 = table1_subdegrees(Table1Type::A2, {.p = 3, .m = 2});
    bool ok = a3.m1 == 75 && a3.m2 == 180 && a7.m1 == 27 && a7.m2 == 36 && a2.m1 == 16 && a2.m2 == 64;
    return std::pair{ok, std::string()};
  });
  rec.check(crit, "class B and C records sum to p^d - 1", "STATED", [&] {
    std::size_t bad = 0, total = 0;
    for (const auto* t : {&class_b_records(), &class_c_records()})
      for (const auto& r : *t) {
        ++total;
        bad += !record_consistent(r);
      }
    return std::pair{bad == 0, std::to_string(total) + " records"};
  });
  rec.check(crit, "A2 at 3^4 (GL_2(3) wr C_2) gives (16,64)", "DERIVED", [&] {
    auto s = nontrivial(gl_wreath(3, 2).group);
    return std::pair{s == std::vector<std::size_t>{16, 64}, join(s)};
  });
  rec.check(crit, "A3 at 3^4 (GL_2(3) o GL_2(3)) gives (32,48)", "DERIVED", [&] {
    auto s = nontrivial(tensor_gl(3, 2).group);
    return std::pair{s == std::vector<std::size_t>{32, 48}, join(s)};
  });
  rec.check(crit, "A3 at 4^4 (GL_2(4) o GL_2(4)) gives (75,180)", "DERIVED", [&] {
    auto s = nontrivial(tensor_gl(4, 2).group);
    return std::pair{s == std::vector<std::size_t>{75, 180}, join(s)};
  });
}

// -------------------------------------------------------------- properties

ColoredDigraph undirected(std::size_t n, const std::vector<std::pair<Point, Point>>& edges) {
  std::vector<std::pair<Point, Point>> arcs;
  for (auto [a, b] : edges) {
    arcs.emplace_back(a, b);
    arcs.emplace_back(b, a);
  }
  return ColoredDigraph::from_arcs(n, arcs);
}

ColoredDigraph cycle(std::size_t n) {
  std::vector<std::pair<Point, Point>> e;
  for (Point i = 0; i < n; ++i) e.emplace_back(i, static_cast<Point>((i + 1) % n));
  return undirected(n, e);
}

ColoredDigraph random_graph(std::size_t n, std::uint64_t seed, bool directed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::pair<Point, Point>> arcs;
  for (Point a = 0; a < n; ++a)
    for (Point b = directed ? 0 : a + 1; b < n; ++b) {
      if (a == b || !coin(rng)) continue;
      arcs.emplace_back(a, b);
      if (!directed) arcs.emplace_back(b, a);
    }
  return ColoredDigraph::from_arcs(n, arcs);
}

std::size_t brute_force_aut_order(const ColoredDigraph& g, const PermGroup& aut, bool& all_members) {
  std::vector<Point> p(g.n());
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  all_members = true;
  do {
    Permutation x(p);
    if (g.is_automorphism(x)) {
      ++count;
      all_members = all_members && aut.contains(x);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

bool blocks_say_primitive(const PermGroup& g) {
  for (Point b = 1; b < g.degree(); ++b) {
    auto labels = minimal_block_system(g, 0, b);
    if (std::any_of(labels.begin(), labels.end(), [&](Point l) { return l != labels[0]; })) return false;
  }
  return true;
}

void property_checks(Recorder& rec) {
  const int crit = 6;
  auto groups = group_corpus();
  rec.check(crit, "orbit-stabilizer identity across the corpus", "TRIVIAL", [&] {
    std::size_t checked = 0;
    for (const auto& [name, g] : groups)
      for (Point x = 0; x < g.degree(); ++x) {
        if (g.order() != Order(g.orbit(x).size()) * g.stabilizer(x).order())
          return std::pair{false, name + " at point " + std::to_string(x)};
        ++checked;
      }
    return std::pair{true, std::to_string(checked) + " (group, point) pairs"};
  });
  rec.progress("closure properties");
  rec.check(crit, "2-closure idempotent, contains G and preserves suborbits", "TRIVIAL", [&] {
    std::size_t checked = 0;
    for (const auto& [name, g] : groups) {
      if (!g.is_transitive()) continue;
      auto c = two_closure(g);
      if (!generators_in(g, c) || two_closure(c).order() != c.order())
        return std::pair{false, name + ": closure not idempotent"};
      auto a = decompose(g), b = decompose(c);
      if (a.rank() != b.rank()) return std::pair{false, name + ": rank changed"};
      for (std::size_t i = 0; i < a.rank(); ++i) {
        auto x = a.suborbits[i], y = b.suborbits[i];
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return std::pair{false, name + ": suborbit " + std::to_string(i) + " changed"};
      }
      ++checked;
    }
    return std::pair{true, std::to_string(checked) + " groups"};
  });
  auto graphs = graph_corpus();
  rec.progress("automorphism brute force");
  rec.check(crit, "Aut equals brute force for corpus graphs with n <= 8", "TRIVIAL", [&] {
    std::size_t checked = 0;
    for (const auto& [name, g] : graphs) {
      if (g.n() > 8) continue;
      auto aut = automorphism_group(g);
      bool members = false;
      auto count = brute_force_aut_order(g, aut, members);
      if (!members || aut.order() != Order(count))
        return std::pair{false, name + ": " + aut.order().str() + " vs " + std::to_string(count)};
      ++checked;
    }
    return std::pair{true, std::to_string(checked) + " graphs"};
  });
  rec.progress("canonical forms");
  rec.check(crit, "canonical form invariant under 100 random relabelings", "TRIVIAL", [&] {
    std::mt19937_64 rng(20240517);
    for (const auto& [name, g] : graphs) {
      auto cert = canonical_form(g).certificate;
      std::vector<Point> p(g.n());
      std::iota(p.begin(), p.end(), 0);
      for (int t = 0; t < 100; ++t) {
        std::shuffle(p.begin(), p.end(), rng);
        if (canonical_form(g.relabel(Permutation(p))).certificate != cert)
          return std::pair{false, name + " relabeling " + std::to_string(t)};
      }
    }
    return std::pair{true, std::to_string(graphs.size()) + " graphs"};
  });
  rec.check(crit, "orbital-digraph primitivity agrees with block finding (degree <= 100)", "TRIVIAL", [&] {
    std::size_t checked = 0, primitive = 0;
    for (const auto& [name, g] : groups) {
      if (!g.is_transitive() || g.degree() > 100) continue;
      bool a = g.is_primitive(), b = blocks_say_primitive(g);
      if (a != b) return std::pair{false, name};
      ++checked;
      primitive += a;
    }
    return std::pair{true, std::to_string(checked) + " groups, " + std::to_string(primitive) + " primitive"};
  });
  rec.check(crit, "two-orbit conditions imply two orbits of the stated lengths (p^d <= 2^12)", "STATED", [&] {
    std::size_t instances = 0;
    for (std::uint32_t p = 2; p <= 4096; ++p) {
      if (!is_prime(p)) continue;
      for (unsigned d = 1; ipow(p, d) <= 4096; ++d) {
        const std::uint64_t q1 = ipow(p, d) - 1;
        Field f;
        for (std::uint64_t m1 = 1; m1 <= d; m1 += 2)
          for (std::uint64_t s = 1; s <= d; s += 2)
            for (std::uint64_t v = 3; v <= d + 1; ++v) {
              if (!is_prime(v)) continue;
              for (std::int64_t e = 0; e < static_cast<std::int64_t>(v * m1); ++e) {
                if (!two_orbit_conditions(p, d, m1, v, e, s).ok) continue;
                if (!f) f = make_field(p, d);
                auto h = PermGroup::generate(f->card(), {mult_by(f, static_cast<std::int64_t>(v * m1)),
                                                         gammaL1_element(f, e, s)});
                auto orbs = h.orbits();
                std::vector<std::size_t> lens;
                for (const auto& o : orbs)
                  if (o.front() != 0) lens.push_back(o.size());
                std::sort(lens.begin(), lens.end());
                if (lens != std::vector<std::size_t>{q1 / v, (v - 1) * q1 / v})
                  return std::pair{false, std::to_string(p) + "^" + std::to_string(d) + " m1=" + std::to_string(m1) +
                                              " v=" + std::to_string(v) + " e=" + std::to_string(e)};
                ++instances;
              }
            }
      }
    }
    return std::pair{instances > 0, std::to_string(instances) + " parameter sets"};
  });
}

PermGroup s5_on_pairs() {
  std::vector<std::pair<Point, Point>> pairs;
  for (Point a = 0; a < 5; ++a)
    for (Point b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  auto act = [&](const Permutation& s) {
    std::vector<Point> im;
    for (auto [a, b] : pairs) {
      Point x = std::min(s[a], s[b]), y = std::max(s[a], s[b]);
      im.push_back(static_cast<Point>(std::find(pairs.begin(), pairs.end(), std::pair{x, y}) - pairs.begin()));
    }
    return Permutation(im);
  };
  return PermGroup::generate(10, {act(cyc(5, {{0, 1}})), act(cyc(5, {{0, 1, 2, 3, 4}}))});
}

}  // namespace

std::vector<std::pair<std::string, PermGroup>> group_corpus() {
  std::vector<std::pair<std::string, PermGroup>> out;
  auto add = [&](std::string name, std::size_t n, std::vector<Permutation> gens) {
    out.emplace_back(std::move(name), PermGroup::generate(n, std::move(gens)));
  };
  add("S4", 4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})});
  add("A4", 4, {cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})});
  add("V4", 4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  add("D4", 4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{1, 3}})});
  add("C5", 5, {cyc(5, {{0, 1, 2, 3, 4}})});
  add("D5", 5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{1, 4}, {2, 3}})});
  add("A5", 5, {cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1, 2, 3, 4}})});
  add("S5", 5, {cyc(5, {{0, 1}}), cyc(5, {{0, 1, 2, 3, 4}})});
  add("C6", 6, {cyc(6, {{0, 1, 2, 3, 4, 5}})});
  add("D6", 6, {cyc(6, {{0, 1, 2, 3, 4, 5}}), cyc(6, {{1, 5}, {2, 4}})});
  add("S3 wr S2 imprimitive", 6, {cyc(6, {{0, 1}}), cyc(6, {{0, 1, 2}}), cyc(6, {{0, 3}, {1, 4}, {2, 5}})});
  add("C2 x C3 intransitive", 6, {cyc(6, {{0, 1}}), cyc(6, {{2, 3, 4}})});
  add("AGL(1,7)", 7, {cyc(7, {{0, 1, 2, 3, 4, 5, 6}}), cyc(7, {{1, 3, 2, 6, 4, 5}})});
  add("L3(2)", 7, {cyc(7, {{0, 1, 2, 3, 4, 5, 6}}), cyc(7, {{1, 2, 4}, {3, 6, 5}})});
  add("C10", 10, {cyc(10, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}})});
  add("M11", 11, {cyc(11, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}), cyc(11, {{2, 6, 10, 7}, {3, 9, 4, 5}})});
  out.emplace_back("S5 on pairs", s5_on_pairs());
  add("S3 wr S2 product", 9, hamming_wreath_generators(3));
  add("S4 wr S2 product", 16, hamming_wreath_generators(4));
  out.emplace_back("AGL(2,3)", affine_group(gl_generators(3, 2)));
  out.emplace_back("AGL(1,8)", semilinear_affine(2, 3, 1, 0, 0));
  out.emplace_back("AGammaL(1,9)", semilinear_affine(3, 2, 1, 0, 1));
  out.emplace_back("G(25,1,1,1) base", rank4_gammaL1(5, 2, 1, 1, 1).group);
  out.emplace_back("G(64,1,0,1) base", rank4_gammaL1(2, 6, 1, 0, 1).group);
  out.emplace_back("49-16", catalog("49-16").group);
  out.emplace_back("81-48", catalog("81-48").group);
  out.emplace_back("GL2(3) wr C2", gl_wreath(3, 2).group);
  out.emplace_back("G(2)", family_G(2).group);
  return out;
}

std::vector<std::pair<std::string, ColoredDigraph>> graph_corpus() {
  std::vector<std::pair<std::string, ColoredDigraph>> out;
  out.emplace_back("K4", undirected(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  out.emplace_back("P4", undirected(4, {{0, 1}, {1, 2}, {2, 3}}));
  out.emplace_back("C5", cycle(5));
  out.emplace_back("directed C5", ColoredDigraph::from_arcs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
  out.emplace_back("K1,4", undirected(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
  out.emplace_back("K2,3", undirected(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}));
  out.emplace_back("C6", cycle(6));
  out.emplace_back("K3,3", undirected(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}));
  out.emplace_back("prism", undirected(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}));
  {
    std::vector<std::pair<Point, Point>> arcs;
    for (Point a = 0; a < 7; ++a)
      for (Point r : {1u, 2u, 4u}) arcs.emplace_back(a, (a + r) % 7);
    out.emplace_back("Paley tournament 7", ColoredDigraph::from_arcs(7, arcs));
  }
  {
    std::vector<std::pair<Point, Point>> e;
    for (Point a = 0; a < 8; ++a)
      for (Point b = a + 1; b < 8; ++b)
        if (__builtin_popcount(a ^ b) == 1) e.emplace_back(a, b);
    out.emplace_back("Q3", undirected(8, e));
  }
  {
    std::vector<std::pair<Point, Point>> e;
    for (Point a = 0; a < 8; ++a) {
      e.emplace_back(a, (a + 1) % 8);
      if (a < 4) e.emplace_back(a, a + 4);
    }
    out.emplace_back("Wagner", undirected(8, e));
  }
  {
    std::vector<std::pair<Point, Point>> arcs{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}};
    std::vector<std::uint32_t> colors{1, 2, 1, 2, 1, 2};
    out.emplace_back("coloured hexagon", ColoredDigraph::from_arcs(6, arcs, colors, {0, 0, 1, 0, 0, 1}));
  }
  out.emplace_back("random 6", random_graph(6, 1, false));
  out.emplace_back("random 7", random_graph(7, 2, false));
  out.emplace_back("random 8", random_graph(8, 3, false));
  out.emplace_back("random digraph 7", random_graph(7, 4, true));
  {
    auto s5 = s5_on_pairs();
    out.emplace_back("Petersen", graph_of(orbital_digraph(s5, decompose(s5), 1)));
  }
  out.emplace_back("H(2,4)", graph_of(hamming_graph(4)));
  {
    std::vector<std::pair<Point, Point>> arcs;
    for (Point a = 0; a < 13; ++a)
      for (Point r : {1u, 3u, 4u, 9u, 10u, 12u}) arcs.emplace_back(a, (a + r) % 13);
    out.emplace_back("Paley 13", ColoredDigraph::from_arcs(13, arcs));
  }
  {
    auto g = catalog("49-16").group;
    auto dec = decompose(g);
    out.emplace_back("49-16 valency 24", graph_of(orbital_digraph(g, dec, with_subdegree(dec, 24).at(0))));
  }
  return out;
}

std::vector<std::string> suite_names() { return {"families", "tables", "catalog", "properties"}; }

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opts) {
  Recorder rec(name, opts);
  if (name == "families") {
    family_g_checks(rec, 2);
    family_g_checks(rec, 3);
    family_h_checks(rec);
    rank4_checks(rec, 5, 2, 1, 1, 1);
    rank4_checks(rec, 2, 6, 1, 0, 1);
  } else if (name == "tables") {
    table_checks(rec);
  } else if (name == "catalog") {
    catalog_checks(rec);
  } else if (name == "properties") {
    property_checks(rec);
  } else {
    throw ValidationError("unknown suite \"" + name + "\"");
  }
  return rec.take();
}

nlohmann::json to_json(const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  std::size_t failed = 0;
  for (const auto& r : results) {
    failed += !r.passed;
    nlohmann::json j{{"suite", r.suite},         {"name", r.name},     {"provenance", r.provenance},
                     {"criterion", r.criterion}, {"passed", r.passed}, {"detail", r.detail}};
    if (r.extended) j["extended"] = true;
    checks.push_back(j);
  }
  return {{"checks", checks}, {"passed", results.size() - failed}, {"failed", failed}};
}

}  // namespace twoclosed
