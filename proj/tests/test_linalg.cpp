#include "doctest.h"

#include <random>
#include <set>

#include "twoclosed/linalg.hpp"

using namespace twoclosed;

namespace {

MatrixGFp random_invertible(std::uint32_t p, unsigned n, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  for (;;) {
    MatrixGFp a(p, n, n);
    for (unsigned r = 0; r < n; ++r)
      for (unsigned c = 0; c < n; ++c) a.at(r, c) = d(rng);
    if (mat_det(a) != 0) return a;
  }
}

MatrixGFq random_invertible_q(const Field& f, unsigned n, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, f->card() - 1);
  for (;;) {
    MatrixGFq a(f, n, n);
    for (unsigned r = 0; r < n; ++r)
      for (unsigned c = 0; c < n; ++c) a.at(r, c) = d(rng);
    if (is_invertible(a)) return a;
  }
}

// Leibniz expansion, independent of the elimination in mat_det.
std::uint32_t leibniz_det(const MatrixGFp& a) {
  unsigned n = a.rows();
  std::vector<unsigned> perm(n);
  for (unsigned i = 0; i < n; ++i) perm[i] = i;
  std::int64_t total = 0;
  do {
    int sign = 1;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    std::int64_t term = 1;
    for (unsigned i = 0; i < n; ++i) term = term * a(i, perm[i]) % a.p();
    total = (total + sign * term) % a.p();
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<std::uint32_t>((total + a.p()) % a.p());
}

}  // namespace

TEST_CASE("vector index map round-trips") {
  for (auto [p, d] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 13}, {3, 8}, {7, 4}, {101, 2}}) {
    VectorIndexMap m(p, d);
    for (std::uint32_t i = 0; i < m.size(); ++i) REQUIRE(m.index(m.vec(i)) == i);
    CHECK(m.vec(0) == std::vector<std::uint32_t>(d, 0));
    CHECK(m.vec(1)[0] == 1);
  }
}

TEST_CASE("matrix inverse") {
  MatrixGFp u(3, 2, 2, {1, 1, 0, 1});
  CHECK(mat_inv(u) == MatrixGFp(3, 2, 2, {1, 2, 0, 1}));
  CHECK(mat_mul(MatrixGFp::identity(3, 2), u) == u);
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto a = random_invertible(5, 3, rng);
    CHECK(mat_mul(a, mat_inv(a)) == MatrixGFp::identity(5, 3));
  }
  CHECK_THROWS_AS(mat_inv(MatrixGFp(3, 2, 2, {1, 2, 2, 1})), std::domain_error);
}

TEST_CASE("determinant agrees with Leibniz expansion") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::uint32_t> d(0, 2);
  for (int i = 0; i < 200; ++i) {
    MatrixGFp a(3, 4, 4);
    for (unsigned r = 0; r < 4; ++r)
      for (unsigned c = 0; c < 4; ++c) a.at(r, c) = d(rng);
    CHECK(mat_det(a) == leibniz_det(a));
  }
}

TEST_CASE("kron and direct_sum") {
  std::mt19937 rng(3);
  auto b = random_invertible(3, 2, rng);
  auto i2 = MatrixGFp::identity(3, 2);
  CHECK(kron(i2, b) == direct_sum(b, b));
  CHECK(direct_sum(i2, i2) == MatrixGFp::identity(3, 4));
  for (int i = 0; i < 20; ++i) {
    auto a = random_invertible(3, 2, rng), c = random_invertible(3, 2, rng);
    auto e = random_invertible(3, 3, rng), f = random_invertible(3, 3, rng);
    CHECK(mat_mul(kron(a, e), kron(c, f)) == kron(mat_mul(a, c), mat_mul(e, f)));
    CHECK(mat_det(direct_sum(a, e)) == mat_det(a) * mat_det(e) % 3);
    CHECK(mat_det(kron(a, e)) != 0);
  }
  CHECK(mat_det(kron(MatrixGFp(3, 2, 2, {1, 1, 1, 1}), i2)) == 0);
  CHECK_THROWS_AS(kron(i2, MatrixGFp::identity(5, 2)), std::invalid_argument);
  CHECK_THROWS_AS(direct_sum(i2, MatrixGFp::identity(5, 2)), std::invalid_argument);
}

TEST_CASE("kron(swap, I) exchanges the X factor on basis vectors") {
  MatrixGFp swap(3, 2, 2, {0, 1, 1, 0});
  auto k = kron(swap, MatrixGFp::identity(3, 3));
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 3; ++j) {
      std::vector<std::uint32_t> v(6, 0), w(6, 0);
      v[i * 3 + j] = 1;
      w[(1 - i) * 3 + j] = 1;
      CHECK(vec_mat(v, k) == w);
    }
}

TEST_CASE("direct sum acts blockwise") {
  std::mt19937 rng(5);
  auto a = random_invertible(3, 2, rng), b = random_invertible(3, 2, rng);
  std::vector<std::uint32_t> u{1, 2}, u0{1, 2, 0, 0};
  auto ua = vec_mat(u, a);
  CHECK(vec_mat(u0, direct_sum(a, b)) == std::vector<std::uint32_t>{ua[0], ua[1], 0, 0});
}

TEST_CASE("blowup") {
  auto f4 = make_field(2, 2);
  CHECK(blowup(MatrixGFq::identity(f4, 1)) == MatrixGFp::identity(2, 2));
  CHECK(blowup(MatrixGFq::diagonal(f4, {f4->omega_pow(1)})) == MatrixGFp(2, 2, 2, {0, 1, 1, 1}));
  CHECK_THROWS_AS(blowup(MatrixGFq(f4, 2, 2)), std::domain_error);
  std::mt19937 rng(13);
  for (int i = 0; i < 30; ++i) {
    auto m = random_invertible_q(f4, 2, rng), n = random_invertible_q(f4, 2, rng);
    CHECK(blowup(mat_mul(m, n)) == mat_mul(blowup(m), blowup(n)));
  }
  // Scalars map onto a cyclic group of order q - 1.
  auto f9 = make_field(3, 2);
  std::set<std::vector<std::uint32_t>> images;
  auto w = blowup(MatrixGFq::diagonal(f9, {f9->omega_pow(1)}));
  auto cur = MatrixGFp::identity(3, 2);
  for (int k = 0; k < 8; ++k) {
    images.insert(cur.entries());
    cur = mat_mul(cur, w);
  }
  CHECK(images.size() == 8);
  CHECK(cur == MatrixGFp::identity(3, 2));
}

TEST_CASE("semilinear blowup") {
  auto f4 = make_field(2, 2);
  std::mt19937 rng(17);
  auto m = random_invertible_q(f4, 2, rng);
  CHECK(semilinear_blowup(m, 0) == linear_action(blowup(m)));
  auto frob = semilinear_blowup(MatrixGFq::identity(f4, 2), 1);
  CHECK(!frob.is_identity());
  CHECK((frob * frob).is_identity());

  // (w, 1) twice on GF(9) is v -> v^9 w^4 = v w^4.
  auto f9 = make_field(3, 2);
  auto g = semilinear_blowup(MatrixGFq::diagonal(f9, {f9->omega_pow(1)}), 1);
  for (std::uint32_t v = 0; v < 9; ++v) CHECK((g * g)[v] == f9->mul(v, f9->omega_pow(4)));

  // Composition rule (M,s)(N,t) = (M^(alpha^t) N, s+t).
  auto f8 = make_field(2, 3);
  for (int i = 0; i < 10; ++i) {
    auto a = random_invertible_q(f8, 2, rng), b = random_invertible_q(f8, 2, rng);
    for (std::uint64_t s = 0; s < 3; ++s)
      for (std::uint64_t t = 0; t < 3; ++t)
        CHECK(semilinear_blowup(a, s) * semilinear_blowup(b, t) ==
              semilinear_blowup(mat_mul(mat_frobenius(a, t), b), s + t));
  }
}

TEST_CASE("translations and linear action") {
  auto t = translation(3, 2, 1);
  CHECK(t[0] == 3);
  CHECK(t[8] == 2);
  MatrixGFp a(3, 2, 2, {0, 1, 1, 0});
  auto g = linear_action(a);
  CHECK(g[1] == 3);
  CHECK(g[0] == 0);
}
