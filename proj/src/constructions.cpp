#include "twoclosed/constructions.hpp"

#include <numeric>
#include <stdexcept>

#include "twoclosed/errors.hpp"

namespace twoclosed {

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> r;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) {
      r.push_back(f);
      while (n % f == 0) n /= f;
    }
  if (n > 1) r.push_back(n);
  return r;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * b % m);
    b = static_cast<std::uint64_t>(static_cast<unsigned __int128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

std::uint64_t checked_degree(std::uint32_t p, unsigned dim, std::uint64_t bound) {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < dim; ++i) {
    n *= p;
    if (n > bound) throw ValidationError("degree " + std::to_string(p) + "^" + std::to_string(dim) +
                                         " exceeds the bound " + std::to_string(bound));
  }
  return n;
}

Order gl_order(std::uint64_t q, unsigned m) {
  Order r = 1, qm = 1;
  for (unsigned i = 0; i < m; ++i) qm *= q;
  Order qi = 1;
  for (unsigned i = 0; i < m; ++i) {
    r *= qm - qi;
    qi *= q;
  }
  return r;
}

std::vector<Permutation> translations(std::uint32_t p, unsigned d) {
  std::vector<Permutation> t;
  for (unsigned k = 0; k < d; ++k) t.push_back(translation(p, d, k));
  return t;
}

Permutation field_multiplication(const Field& f, std::uint32_t c) {
  std::vector<Point> im(f->card());
  for (std::uint32_t x = 0; x < f->card(); ++x) im[x] = f->mul(x, c);
  return Permutation(std::move(im));
}

}  // namespace

PermGroup affine_group(std::uint32_t p, unsigned d, const std::vector<Permutation>& stabilizer,
                       const GroupOptions& opts) {
  auto gens = translations(p, d);
  const std::size_t n = gens.front().degree();
  for (const auto& g : stabilizer) {
    if (g.degree() != n) throw std::invalid_argument("affine_group: stabilizer degree mismatch");
    if (g[0] != 0) throw std::invalid_argument("affine_group: stabilizer element moves 0");
    gens.push_back(g);
  }
  GroupOptions o = opts;
  if (o.base_prefix.empty()) o.base_prefix = {0};
  return PermGroup::generate(n, std::move(gens), o);
}

PermGroup affine_group(const std::vector<MatrixGFp>& stabilizer) {
  if (stabilizer.empty()) throw std::invalid_argument("affine_group: no matrices given");
  std::uint32_t p = stabilizer.front().p();
  unsigned d = stabilizer.front().rows();
  std::vector<Permutation> perms;
  for (const auto& a : stabilizer) {
    if (a.p() != p || a.rows() != d || a.cols() != d)
      throw std::invalid_argument("affine_group: matrices of different shapes");
    if (mat_det(a) == 0) throw std::domain_error("affine_group: singular generator");
    perms.push_back(linear_action(a));
  }
  return affine_group(p, d, perms);
}

std::vector<MatrixGFq> gl_generators(const Field& f, unsigned m) {
  std::vector<MatrixGFq> gens;
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) {
      if (i == j) continue;
      for (unsigned k = 0; k < f->d(); ++k) {
        auto t = MatrixGFq::identity(f, m);
        t.at(i, j) = f->omega_pow(k);
        gens.push_back(std::move(t));
      }
    }
  std::vector<std::uint32_t> diag(m, 1);
  diag[0] = f->omega_pow(1);
  gens.push_back(MatrixGFq::diagonal(f, diag));
  return gens;
}

std::vector<MatrixGFp> gl_generators(std::uint32_t p, unsigned m) {
  std::vector<MatrixGFp> out;
  for (const auto& g : gl_generators(make_field(p, 1), m)) out.emplace_back(p, m, m, g.entries());
  return out;
}

Permutation gammaL1_element(const Field& f, std::int64_t e, std::uint64_t s) {
  std::uint32_t c = f->omega_pow(e);
  std::vector<Point> im(f->card());
  for (std::uint32_t x = 0; x < f->card(); ++x) im[x] = f->frobenius(f->mul(x, c), s);
  return Permutation(std::move(im));
}

void validate_standard_form(const StandardForm& sf) {
  if (!is_prime(sf.p)) throw ValidationError("standard form: p = " + std::to_string(sf.p) + " is not prime");
  if (sf.d < 1) throw ValidationError("standard form: d must be positive");
  const std::uint64_t q1 = ipow(sf.p, sf.d) - 1;
  if (sf.m == 0 || q1 % sf.m != 0)
    throw ValidationError("standard form: m | p^d-1 fails, m = " + std::to_string(sf.m) +
                          ", p^d-1 = " + std::to_string(q1));
  if (sf.s == 0 || sf.d % sf.s != 0)
    throw ValidationError("standard form: s | d fails, s = " + std::to_string(sf.s) +
                          ", d = " + std::to_string(sf.d));
  const std::uint64_t idx = q1 / (ipow(sf.p, static_cast<unsigned>(sf.s)) - 1);
  std::int64_t em = sf.e % static_cast<std::int64_t>(sf.m);
  if (em < 0) em += static_cast<std::int64_t>(sf.m);
  if (static_cast<unsigned __int128>(em) * idx % sf.m != 0)
    throw ValidationError("standard form: e(p^d-1)/(p^s-1) = 0 mod m fails, e = " + std::to_string(sf.e));
}

GammaL1Subgroup gammaL1_subgroup(std::uint32_t p, unsigned d, std::uint64_t m, std::int64_t e,
                                 std::uint64_t s) {
  StandardForm sf{p, d, m, e, s};
  validate_standard_form(sf);
  checked_degree(p, d, kDefaultFieldBound);
  GammaL1Subgroup g;
  g.form = sf;
  g.field = make_field(p, d);
  g.mult = field_multiplication(g.field, g.field->omega_pow(static_cast<std::int64_t>(m)));
  g.semi = gammaL1_element(g.field, e, s);
  g.order = Order((ipow(p, d) - 1) / m) * (d / s);
  return g;
}

ConditionReport two_orbit_conditions(std::uint32_t p, unsigned d, std::uint64_t m1, std::uint64_t v,
                                     std::int64_t e, std::uint64_t s) {
  ConditionReport r;
  auto fail = [&](std::string msg) { r.failures.push_back(std::move(msg)); };
  if (!is_prime(p)) fail("p is not prime");
  if (m1 == 0 || m1 % 2 == 0) fail("m1 must be odd");
  if (s == 0 || s % 2 == 0) fail("s must be odd");
  if (!r.failures.empty()) return r;

  const std::uint64_t ps1 = ipow(p, static_cast<unsigned>(s)) - 1;
  for (auto r1 : prime_divisors(m1))
    if (ps1 % r1 != 0) fail("prime divisor " + std::to_string(r1) + " of m1 does not divide p^s-1");

  if (v < 3 || !is_prime(v)) {
    fail("v = " + std::to_string(v) + " is not an odd prime");
  } else {
    // Order of p^(s m1) modulo v must be exactly v - 1.
    std::uint64_t base = powmod(p, s * m1, v);
    if (base == 0) {
      fail("v divides p");
    } else {
      if (powmod(base, v - 1, v) != 1) fail("v does not divide p^(s m1 (v-1)) - 1");
      for (std::uint64_t t = 1; t < v - 1; ++t)
        if (powmod(base, t, v) == 1) {
          fail("v divides p^(s m1 t) - 1 for t = " + std::to_string(t));
          break;
        }
    }
  }
  std::uint64_t ae = static_cast<std::uint64_t>(e < 0 ? -e : e);
  if (std::gcd(ae, m1) != 1) fail("gcd(e, m1) != 1");
  if (d % (m1 * s * (v - 1)) != 0) fail("m1 s (v-1) does not divide d");
  r.ok = r.failures.empty();
  return r;
}

Construction rank4_gammaL1(std::uint32_t p, unsigned d, std::uint64_t m1, std::int64_t e, std::uint64_t s) {
  auto cond = two_orbit_conditions(p, d, m1, 3, e, s);
  if (!cond.ok) throw ValidationError("rank4-gammaL1: condition " + cond.failures.front());
  if (m1 % 3 == 0) throw ValidationError("rank4-gammaL1: gcd(m1, 3) != 1");
  checked_degree(p, d, kDefaultFieldBound);
  // Standard form for the ambient H = <w^(3 m1), w^e a^s>.
  validate_standard_form({p, d, 3 * m1, e, s});
  Field f = make_field(p, d);
  Permutation a = field_multiplication(f, f->omega_pow(static_cast<std::int64_t>(3 * m1)));
  Permutation b = gammaL1_element(f, e, s);
  Construction c;
  c.name = "G(" + std::to_string(p) + "^" + std::to_string(d) + "," + std::to_string(m1) + "," +
           std::to_string(e) + "," + std::to_string(s) + ") base";
  c.group = affine_group(p, d, {a, b * b});
  c.expected_stabilizer_order = Order((ipow(p, d) - 1) / (3 * m1)) * (d / (2 * s));
  return c;
}

Construction family_G(unsigned m, std::uint64_t bound) {
  if (m < 2) throw ValidationError("family G: m must be at least 2");
  checked_degree(3, 2 * m, bound);
  const std::uint32_t p = 3;
  auto im = MatrixGFp::identity(p, m);
  std::vector<MatrixGFp> stab{kron(MatrixGFp(p, 2, 2, {0, 1, 1, 0}), im),
                              kron(MatrixGFp(p, 2, 2, {1, 0, 0, 2}), im)};
  for (const auto& g : gl_generators(p, m)) stab.push_back(kron(MatrixGFp::identity(p, 2), g));
  Construction c;
  c.name = "G(" + std::to_string(m) + ")";
  c.group = affine_group(stab);
  c.expected_stabilizer_order = 4 * gl_order(3, m);
  const Point qm = static_cast<Point>(ipow(3, m));
  c.labels = {{"B1", 1}, {"B2", 1 + qm}, {"B3", 1 + 3 * qm}};
  return c;
}

Construction family_H(unsigned m, std::uint64_t bound) {
  if (m < 2) throw ValidationError("family H: m must be at least 2");
  checked_degree(4, 2 * m, bound);
  Field f = make_field(2, 2);
  const std::uint32_t lambda = f->omega_pow(1);
  auto im = MatrixGFq::identity(f, m);
  std::vector<Permutation> stab{semilinear_blowup(kron(MatrixGFq::diagonal(f, {lambda, 1}), im), 0),
                                semilinear_blowup(kron(MatrixGFq::diagonal(f, {1, lambda}), im), 0),
                                semilinear_blowup(kron(MatrixGFq(f, 2, 2, {0, 1, 1, 0}), im), 0)};
  for (const auto& g : gl_generators(f, m))
    stab.push_back(semilinear_blowup(kron(MatrixGFq::identity(f, 2), g), 0));
  stab.push_back(semilinear_blowup(MatrixGFq::identity(f, 2 * m), 1));
  Construction c;
  c.name = "H(" + std::to_string(m) + ")";
  c.group = affine_group(2, 4 * m, stab);
  c.expected_stabilizer_order = 12 * gl_order(4, m);
  const Point qm = static_cast<Point>(ipow(4, m));
  c.labels = {{"B1", 1}, {"B2", 1 + qm}, {"B3", 1 + 4 * qm}};
  return c;
}

Construction tensor_gl(std::uint32_t q, unsigned m, std::uint64_t bound) {
  if (m < 1) throw ValidationError("tensor-gl: m must be positive");
  std::uint32_t p = 0;
  unsigned k = 0;
  for (std::uint32_t r = 2; r <= q; ++r)
    if (q % r == 0) {
      p = r;
      break;
    }
  if (p == 0) throw ValidationError("tensor-gl: q must be a prime power");
  for (std::uint64_t x = q; x > 1; x /= p, ++k)
    if (x % p != 0 || !is_prime(p)) throw ValidationError("tensor-gl: q must be a prime power");
  checked_degree(q, 2 * m, bound);
  Field f = make_field(p, k);
  auto i2 = MatrixGFq::identity(f, 2);
  auto im = MatrixGFq::identity(f, m);
  std::vector<Permutation> stab;
  for (const auto& g : gl_generators(f, 2)) stab.push_back(semilinear_blowup(kron(g, im), 0));
  for (const auto& g : gl_generators(f, m)) stab.push_back(semilinear_blowup(kron(i2, g), 0));
  Construction c;
  c.name = "GL2(" + std::to_string(q) + ") o GL" + std::to_string(m) + "(" + std::to_string(q) + ")";
  c.group = affine_group(p, 2 * m * k, stab);
  // The two factors share the scalars GF(q)*.
  c.expected_stabilizer_order = gl_order(q, 2) * gl_order(q, m) / (q - 1);
  return c;
}

Construction gl_wreath(std::uint32_t p, unsigned m, std::uint64_t bound) {
  if (!is_prime(p)) throw ValidationError("gl-wreath: p must be prime");
  if (m < 1) throw ValidationError("gl-wreath: m must be positive");
  checked_degree(p, 2 * m, bound);
  auto im = MatrixGFp::identity(p, m);
  std::vector<MatrixGFp> stab{kron(MatrixGFp(p, 2, 2, {0, 1, 1, 0}), im)};
  for (const auto& g : gl_generators(p, m)) stab.push_back(direct_sum(g, im));
  Construction c;
  c.name = "GL" + std::to_string(m) + "(" + std::to_string(p) + ") wr C2";
  c.group = affine_group(stab);
  Order gm = gl_order(p, m);
  c.expected_stabilizer_order = gm * gm * 2;
  return c;
}

Digraph hamming_graph(std::uint32_t k) {
  if (k < 2) throw ValidationError("hamming_graph: k must be at least 2");
  Digraph d;
  d.n = std::size_t{k} * k;
  for (Point x = 0; x < d.n; ++x)
    for (Point y = 0; y < d.n; ++y) {
      bool same_i = x % k == y % k, same_j = x / k == y / k;
      if (same_i != same_j) d.arcs.emplace_back(x, y);
    }
  d.is_graph = true;
  return d;
}

std::vector<Permutation> hamming_wreath_generators(std::uint32_t k) {
  const std::size_t n = std::size_t{k} * k;
  std::vector<Point> swap_first(n), cycle_first(n), flip(n);
  for (Point x = 0; x < n; ++x) {
    Point i = x % k, j = x / k;
    Point si = i < 2 ? 1 - i : i;
    swap_first[x] = si + k * j;
    cycle_first[x] = (i + 1) % k + k * j;
    flip[x] = j + k * i;
  }
  return {Permutation(swap_first), Permutation(cycle_first), Permutation(flip)};
}

std::pair<std::uint32_t, std::uint32_t> quaternion_parameters(std::uint32_t p) {
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      if ((a * a + b * b) % p == p - 1) return {a, b};
  throw std::logic_error("quaternion_parameters: no solution");
}

std::vector<std::string> catalog_names() { return {"49-16", "81-48", "121-23", "2401-663"}; }

Construction catalog(const std::string& name) {
  Construction c;
  c.name = name;
  auto semilinear = [&](std::uint32_t p, unsigned d, std::int64_t m, std::int64_t e, std::uint64_t s) {
    Field f = make_field(p, d);
    c.group = affine_group(p, d, {field_multiplication(f, f->omega_pow(m)), gammaL1_element(f, e, s)});
  };
  if (name == "49-16") {
    semilinear(7, 2, 4, 0, 1);
    c.expected_stabilizer_order = 24;
  } else if (name == "81-48") {
    semilinear(3, 4, 4, 0, 1);
    c.expected_stabilizer_order = 80;
  } else if (name == "2401-663") {
    semilinear(7, 4, 10, 5, 1);
    c.expected_stabilizer_order = 960;
  } else if (name == "121-23") {
    const std::uint32_t p = 11;
    auto [a, b] = quaternion_parameters(p);
    Field f = make_field(p, 1);
    std::uint32_t w2 = f->omega_pow(2);
    c.group = affine_group({MatrixGFp(p, 2, 2, {0, 1, p - 1, 0}), MatrixGFp(p, 2, 2, {a, b, b, (p - a) % p}),
                            MatrixGFp(p, 2, 2, {w2, 0, 0, w2})});
    c.expected_stabilizer_order = 40;
  } else {
    throw ValidationError("catalog: unknown entry \"" + name + "\"");
  }
  return c;
}

}  // namespace twoclosed
