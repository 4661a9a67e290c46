#include "doctest.h"

#include <set>

#include "twoclosed/errors.hpp"
#include "twoclosed/gfield.hpp"

using namespace twoclosed;

namespace {

// Polynomials as coefficient vectors, constant term first.
using Poly = std::vector<std::uint32_t>;

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  std::size_t d = f.size() - 1;
  Poly prod(2 * d, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t k = prod.size(); k-- > d;) {
    std::uint32_t c = prod[k];
    if (!c) continue;
    for (std::size_t i = 0; i <= d; ++i) prod[k - d + i] = (prod[k - d + i] + (p - c) * f[i]) % p;
  }
  prod.resize(d);
  return prod;
}

// Multiplicative order of x modulo f, 0 if x is not invertible or the order
// exceeds the bound.
std::uint64_t order_of_x(const Poly& f, std::uint32_t p, std::uint64_t bound) {
  std::size_t d = f.size() - 1;
  Poly one(d, 0), x(d, 0), cur;
  one[0] = 1;
  if (d == 1) {
    x[0] = (p - f[0]) % p;
  } else {
    x[1] = 1;
  }
  cur = x;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (cur == one) return k;
    cur = mulmod(cur, x, f, p);
  }
  return 0;
}

bool irreducible_by_search(const Poly& f, std::uint32_t p) {
  // Exhaustive trial division by monic polynomials of degree 1..d/2.
  std::size_t d = f.size() - 1;
  for (std::size_t k = 1; 2 * k <= d; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g(k + 1);
      std::uint64_t t = c;
      for (std::size_t i = 0; i < k; ++i, t /= p) g[i] = t % p;
      g[k] = 1;
      Poly r = f;
      for (std::size_t top = d; top >= k; --top) {
        std::uint32_t q = r[top];
        for (std::size_t i = 0; i <= k; ++i) r[top - k + i] = (r[top - k + i] + (p - q) * g[i]) % p;
        if (top == k) break;
      }
      bool zero = true;
      for (std::size_t i = 0; i < k; ++i) zero = zero && r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

// Lex-least primitive monic modulus, comparing (c_{d-1}, ..., c0).
Poly brute_force_modulus(std::uint32_t p, unsigned d) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < d; ++i) q *= p;
  std::vector<Poly> cands;
  for (std::uint64_t c = 0; c < q; ++c) {
    Poly f(d + 1);
    std::uint64_t t = c;
    for (unsigned i = 0; i < d; ++i, t /= p) f[i] = t % p;
    f[d] = 1;
    if (!irreducible_by_search(f, p)) continue;
    if (order_of_x(f, p, q) != q - 1) continue;
    cands.push_back(f);
  }
  auto key = [](const Poly& f) { return Poly(f.rbegin(), f.rend()); };
  return *std::min_element(cands.begin(), cands.end(),
                           [&](const Poly& a, const Poly& b) { return key(a) < key(b); });
}

}  // namespace

TEST_CASE("make_field picks the lex-least primitive modulus") {
  CHECK(make_field(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(make_field(3, 2)->modulus() == std::vector<std::uint32_t>{2, 1, 1});
  auto f7 = make_field(7, 1);
  CHECK(f7->modulus() == std::vector<std::uint32_t>{4, 1});
  CHECK(f7->omega_pow(1) == 3);
}

TEST_CASE("make_field agrees with exhaustive search for d >= 2") {
  for (auto [p, d] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}, {11, 2}}) {
    CAPTURE(p);
    CAPTURE(d);
    CHECK(make_field(p, d)->modulus() == brute_force_modulus(p, d));
  }
}

TEST_CASE("prime fields use the least primitive root") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 41u}) {
    std::uint32_t g = 1;
    for (;; ++g) {
      std::uint32_t x = 1, ord = 0;
      do {
        x = x * g % p;
        ++ord;
      } while (x != 1);
      if (ord == p - 1) break;
    }
    CHECK(make_field(p, 1)->omega_pow(1) == g);
  }
}

TEST_CASE("make_field rejects bad input") {
  CHECK_THROWS_AS(make_field(4, 1), ValidationError);
  CHECK_THROWS_AS(make_field(2, 0), ValidationError);
  CHECK_THROWS_AS(make_field(2, 21), ValidationError);
  CHECK_NOTHROW(make_field(2, 20));
}

TEST_CASE("GF(4) arithmetic") {
  auto f = make_field(2, 2);
  auto w = fomega(f);
  CHECK(w * w == w + fone(f));
  CHECK(fpow(w, 3) == fone(f));
  CHECK_THROWS_AS(finv(fzero(f)), std::domain_error);
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (auto [p, d] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 3}, {3, 2}, {5, 2}, {7, 1}}) {
    auto f = make_field(p, d);
    const std::uint32_t q = f->card();
    CHECK(fpow(fomega(f), q - 1) == fone(f));
    std::set<std::uint32_t> powers;
    for (std::uint32_t k = 0; k < q - 1; ++k) powers.insert(f->omega_pow(k));
    CHECK(powers.size() == q - 1);
    for (std::uint32_t a = 0; a < q; ++a) {
      FieldElement x(f.get(), a);
      CHECK(x + fneg(x) == fzero(f));
      if (a) CHECK(x * finv(x) == fone(f));
      for (std::uint32_t b = 0; b < q; ++b) {
        FieldElement y(f.get(), b);
        CHECK(x * y == y * x);
        CHECK(x + y == y + x);
        for (std::uint32_t c = 0; c < q; c += 3) {
          FieldElement z(f.get(), c);
          CHECK(x * (y + z) == x * y + x * z);
        }
      }
    }
  }
}

TEST_CASE("Frobenius is a field automorphism of order d") {
  auto f = make_field(3, 3);
  for (std::uint32_t a = 0; a < f->card(); ++a) {
    FieldElement x(f.get(), a);
    CHECK(frobenius(x, 1) == fpow(x, 3));
    CHECK(frobenius(x, 3) == x);
    for (std::uint32_t b = 0; b < f->card(); b += 5) {
      FieldElement y(f.get(), b);
      CHECK(frobenius(x + y, 1) == frobenius(x, 1) + frobenius(y, 1));
      CHECK(frobenius(x * y, 2) == frobenius(x, 2) * frobenius(y, 2));
    }
  }
}

TEST_CASE("discrete log inverts omega powers") {
  auto f = make_field(5, 2);
  for (std::uint32_t k = 0; k < 24; ++k) CHECK(discrete_log(FieldElement(f.get(), f->omega_pow(k))) == k);
  CHECK_THROWS_AS(discrete_log(fzero(f)), std::domain_error);
}
