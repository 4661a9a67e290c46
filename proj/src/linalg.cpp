#include "twoclosed/linalg.hpp"

#include <stdexcept>

namespace twoclosed {

namespace {

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

std::uint32_t invmod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw std::domain_error("invmod: not invertible");
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

void require_same_p(std::uint32_t a, std::uint32_t b) {
  if (a != b) throw std::invalid_argument("mismatched characteristic");
}

}  // namespace

VectorIndexMap::VectorIndexMap(std::uint32_t p, unsigned dim) : p_(p), dim_(dim), n_(1) {
  for (unsigned i = 0; i < dim; ++i) n_ *= p;
}

std::vector<std::uint32_t> VectorIndexMap::vec(std::uint32_t index) const {
  std::vector<std::uint32_t> v(dim_);
  for (unsigned i = 0; i < dim_; ++i, index /= p_) v[i] = index % p_;
  return v;
}

std::uint32_t VectorIndexMap::index(const std::vector<std::uint32_t>& v) const {
  std::uint32_t r = 0;
  for (unsigned i = dim_; i-- > 0;) r = r * p_ + v[i];
  return r;
}

MatrixGFp::MatrixGFp(std::uint32_t p, unsigned rows, unsigned cols)
    : p_(p), rows_(rows), cols_(cols), e_(std::size_t{rows} * cols, 0) {}

MatrixGFp::MatrixGFp(std::uint32_t p, unsigned rows, unsigned cols, std::vector<std::uint32_t> entries)
    : p_(p), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != std::size_t{rows} * cols) throw std::invalid_argument("MatrixGFp: entry count");
  for (auto& x : e_) x %= p_;
}

MatrixGFp MatrixGFp::identity(std::uint32_t p, unsigned n) {
  MatrixGFp m(p, n, n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatrixGFp mat_mul(const MatrixGFp& a, const MatrixGFp& b) {
  require_same_p(a.p(), b.p());
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  MatrixGFp c(a.p(), a.rows(), b.cols());
  for (unsigned i = 0; i < a.rows(); ++i)
    for (unsigned k = 0; k < a.cols(); ++k) {
      std::uint32_t x = a(i, k);
      if (x == 0) continue;
      for (unsigned j = 0; j < b.cols(); ++j)
        c.at(i, j) = (c(i, j) + mulmod(x, b(k, j), a.p())) % a.p();
    }
  return c;
}

MatrixGFp mat_inv(const MatrixGFp& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("mat_inv: not square");
  const unsigned n = a.rows();
  const std::uint32_t p = a.p();
  MatrixGFp m = a;
  MatrixGFp inv = MatrixGFp::identity(p, n);
  for (unsigned col = 0; col < n; ++col) {
    unsigned piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) throw std::domain_error("mat_inv: singular matrix");
    for (unsigned j = 0; j < n; ++j) {
      std::swap(m.at(piv, j), m.at(col, j));
      std::swap(inv.at(piv, j), inv.at(col, j));
    }
    std::uint32_t s = invmod(m(col, col), p);
    for (unsigned j = 0; j < n; ++j) {
      m.at(col, j) = mulmod(m(col, j), s, p);
      inv.at(col, j) = mulmod(inv(col, j), s, p);
    }
    for (unsigned r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      std::uint32_t f = m(r, col);
      for (unsigned j = 0; j < n; ++j) {
        m.at(r, j) = (m(r, j) + p - mulmod(f, m(col, j), p)) % p;
        inv.at(r, j) = (inv(r, j) + p - mulmod(f, inv(col, j), p)) % p;
      }
    }
  }
  return inv;
}

bool mat_eq(const MatrixGFp& a, const MatrixGFp& b) { return a == b; }

std::uint32_t mat_det(const MatrixGFp& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("mat_det: not square");
  const unsigned n = a.rows();
  const std::uint32_t p = a.p();
  MatrixGFp m = a;
  std::uint32_t det = 1;
  for (unsigned col = 0; col < n; ++col) {
    unsigned piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (unsigned j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      det = (p - det) % p;
    }
    det = mulmod(det, m(col, col), p);
    std::uint32_t s = invmod(m(col, col), p);
    for (unsigned r = col + 1; r < n; ++r) {
      std::uint32_t f = mulmod(m(r, col), s, p);
      if (f == 0) continue;
      for (unsigned j = col; j < n; ++j) m.at(r, j) = (m(r, j) + p - mulmod(f, m(col, j), p)) % p;
    }
  }
  return det;
}

MatrixGFp kron(const MatrixGFp& a, const MatrixGFp& b) {
  require_same_p(a.p(), b.p());
  MatrixGFp c(a.p(), a.rows() * b.rows(), a.cols() * b.cols());
  for (unsigned i = 0; i < a.rows(); ++i)
    for (unsigned j = 0; j < a.cols(); ++j)
      for (unsigned k = 0; k < b.rows(); ++k)
        for (unsigned l = 0; l < b.cols(); ++l)
          c.at(i * b.rows() + k, j * b.cols() + l) = mulmod(a(i, j), b(k, l), a.p());
  return c;
}

MatrixGFp direct_sum(const MatrixGFp& a, const MatrixGFp& b) {
  require_same_p(a.p(), b.p());
  MatrixGFp c(a.p(), a.rows() + b.rows(), a.cols() + b.cols());
  for (unsigned i = 0; i < a.rows(); ++i)
    for (unsigned j = 0; j < a.cols(); ++j) c.at(i, j) = a(i, j);
  for (unsigned i = 0; i < b.rows(); ++i)
    for (unsigned j = 0; j < b.cols(); ++j) c.at(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

std::vector<std::uint32_t> vec_mat(const std::vector<std::uint32_t>& v, const MatrixGFp& a) {
  if (v.size() != a.rows()) throw std::invalid_argument("vec_mat: shape mismatch");
  std::vector<std::uint32_t> r(a.cols(), 0);
  for (unsigned i = 0; i < a.rows(); ++i) {
    if (v[i] == 0) continue;
    for (unsigned j = 0; j < a.cols(); ++j) r[j] = (r[j] + mulmod(v[i], a(i, j), a.p())) % a.p();
  }
  return r;
}

MatrixGFq::MatrixGFq(Field field, unsigned rows, unsigned cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), e_(std::size_t{rows} * cols, 0) {}

MatrixGFq::MatrixGFq(Field field, unsigned rows, unsigned cols, std::vector<std::uint32_t> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != std::size_t{rows} * cols) throw std::invalid_argument("MatrixGFq: entry count");
  for (auto x : e_)
    if (x >= field_->card()) throw std::invalid_argument("MatrixGFq: entry out of field");
}

MatrixGFq MatrixGFq::identity(Field field, unsigned n) {
  MatrixGFq m(std::move(field), n, n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatrixGFq MatrixGFq::diagonal(Field field, const std::vector<std::uint32_t>& diag) {
  const unsigned n = static_cast<unsigned>(diag.size());
  MatrixGFq m(std::move(field), n, n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = diag[i];
  return m;
}

MatrixGFq mat_mul(const MatrixGFq& a, const MatrixGFq& b) {
  if (a.field() != b.field()) throw std::invalid_argument("mat_mul: mixed fields");
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  const FieldSpec& f = *a.field();
  MatrixGFq c(a.field(), a.rows(), b.cols());
  for (unsigned i = 0; i < a.rows(); ++i)
    for (unsigned k = 0; k < a.cols(); ++k)
      for (unsigned j = 0; j < b.cols(); ++j)
        c.at(i, j) = f.add(c(i, j), f.mul(a(i, k), b(k, j)));
  return c;
}

MatrixGFq kron(const MatrixGFq& a, const MatrixGFq& b) {
  if (a.field() != b.field()) throw std::invalid_argument("kron: mixed fields");
  const FieldSpec& f = *a.field();
  MatrixGFq c(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (unsigned i = 0; i < a.rows(); ++i)
    for (unsigned j = 0; j < a.cols(); ++j)
      for (unsigned k = 0; k < b.rows(); ++k)
        for (unsigned l = 0; l < b.cols(); ++l)
          c.at(i * b.rows() + k, j * b.cols() + l) = f.mul(a(i, j), b(k, l));
  return c;
}

MatrixGFq mat_frobenius(const MatrixGFq& a, std::uint64_t s) {
  MatrixGFq c = a;
  for (unsigned i = 0; i < a.rows(); ++i)
    for (unsigned j = 0; j < a.cols(); ++j) c.at(i, j) = a.field()->frobenius(a(i, j), s);
  return c;
}

bool is_invertible(const MatrixGFq& a) {
  if (a.rows() != a.cols()) return false;
  const FieldSpec& f = *a.field();
  const unsigned n = a.rows();
  MatrixGFq m = a;
  for (unsigned col = 0; col < n; ++col) {
    unsigned piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) return false;
    for (unsigned j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
    std::uint32_t s = f.inv(m(col, col));
    for (unsigned r = col + 1; r < n; ++r) {
      std::uint32_t fac = f.neg(f.mul(m(r, col), s));
      if (fac == 0) continue;
      for (unsigned j = col; j < n; ++j) m.at(r, j) = f.add(m(r, j), f.mul(fac, m(col, j)));
    }
  }
  return true;
}

MatrixGFp blowup(const MatrixGFq& m) {
  if (!is_invertible(m)) throw std::domain_error("blowup: singular matrix");
  const FieldSpec& f = *m.field();
  const unsigned e = f.d();
  MatrixGFp out(f.p(), m.rows() * e, m.cols() * e);
  for (unsigned i = 0; i < m.rows(); ++i)
    for (unsigned k = 0; k < m.cols(); ++k)
      for (unsigned j = 0; j < e; ++j) {
        std::uint32_t prod = f.mul(f.omega_pow(j), m(i, k));
        auto c = f.coeffs(prod);
        for (unsigned l = 0; l < e; ++l) out.at(i * e + j, k * e + l) = c[l];
      }
  return out;
}

Permutation semilinear_blowup(const MatrixGFq& m, std::uint64_t s) {
  if (!is_invertible(m)) throw std::domain_error("semilinear_blowup: singular matrix");
  const FieldSpec& f = *m.field();
  const unsigned dim = m.rows();
  const std::uint32_t q = f.card();
  std::uint64_t n = 1;
  for (unsigned i = 0; i < dim; ++i) n *= q;
  std::vector<Point> images(n);
  std::vector<std::uint32_t> v(dim), w(dim);
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    std::uint64_t t = idx;
    for (unsigned k = 0; k < dim; ++k, t /= q) v[k] = f.frobenius(static_cast<std::uint32_t>(t % q), s);
    for (unsigned j = 0; j < dim; ++j) {
      std::uint32_t acc = 0;
      for (unsigned k = 0; k < dim; ++k) acc = f.add(acc, f.mul(v[k], m(k, j)));
      w[j] = acc;
    }
    std::uint64_t r = 0;
    for (unsigned k = dim; k-- > 0;) r = r * q + w[k];
    images[idx] = static_cast<Point>(r);
  }
  return Permutation(std::move(images));
}

Permutation linear_action(const MatrixGFp& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("linear_action: not square");
  VectorIndexMap map(a.p(), a.rows());
  std::vector<Point> images(map.size());
  for (std::uint32_t i = 0; i < map.size(); ++i) images[i] = map.index(vec_mat(map.vec(i), a));
  return Permutation(std::move(images));  // rejects singular matrices
}

Permutation translation(std::uint32_t p, unsigned dim, unsigned k) {
  VectorIndexMap map(p, dim);
  std::vector<Point> images(map.size());
  for (std::uint32_t i = 0; i < map.size(); ++i) {
    auto v = map.vec(i);
    v[k] = (v[k] + 1) % p;
    images[i] = map.index(v);
  }
  return Permutation(std::move(images));
}

}  // namespace twoclosed
