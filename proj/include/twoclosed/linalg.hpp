#pragma once

// Dense linear algebra over GF(p) and GF(q), and the passage from matrices
// to permutations of vector indices.
//
// Vectors are rows and matrices act on the right (v -> vA). A vector over
// GF(p) of dimension d has index sum v_i p^i (coordinate 0 least
// significant). In a tensor product X (x) Y the basis vector x_i (x) y_j has
// coordinate i * dim(Y) + j.

#include <cstdint>
#include <vector>

#include "twoclosed/gfield.hpp"
#include "twoclosed/perm.hpp"

namespace twoclosed {

class VectorIndexMap {
 public:
  VectorIndexMap(std::uint32_t p, unsigned dim);

  std::uint32_t p() const { return p_; }
  unsigned dim() const { return dim_; }
  std::uint32_t size() const { return n_; }

  std::vector<std::uint32_t> vec(std::uint32_t index) const;
  std::uint32_t index(const std::vector<std::uint32_t>& v) const;

 private:
  std::uint32_t p_;
  unsigned dim_;
  std::uint32_t n_;
};

class MatrixGFp {
 public:
  MatrixGFp(std::uint32_t p, unsigned rows, unsigned cols);
  MatrixGFp(std::uint32_t p, unsigned rows, unsigned cols, std::vector<std::uint32_t> entries);

  static MatrixGFp identity(std::uint32_t p, unsigned n);

  std::uint32_t p() const { return p_; }
  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  std::uint32_t operator()(unsigned r, unsigned c) const { return e_[r * cols_ + c]; }
  std::uint32_t& at(unsigned r, unsigned c) { return e_[r * cols_ + c]; }
  const std::vector<std::uint32_t>& entries() const { return e_; }

  friend bool operator==(const MatrixGFp&, const MatrixGFp&) = default;

 private:
  std::uint32_t p_;
  unsigned rows_, cols_;
  std::vector<std::uint32_t> e_;
};

MatrixGFp mat_mul(const MatrixGFp& a, const MatrixGFp& b);
/// Throws std::domain_error on singular input.
MatrixGFp mat_inv(const MatrixGFp& a);
bool mat_eq(const MatrixGFp& a, const MatrixGFp& b);
std::uint32_t mat_det(const MatrixGFp& a);
MatrixGFp kron(const MatrixGFp& a, const MatrixGFp& b);
MatrixGFp direct_sum(const MatrixGFp& a, const MatrixGFp& b);
std::vector<std::uint32_t> vec_mat(const std::vector<std::uint32_t>& v, const MatrixGFp& a);

/// Matrix over an extension field GF(q); entries are packed field values.
class MatrixGFq {
 public:
  MatrixGFq(Field field, unsigned rows, unsigned cols);
  MatrixGFq(Field field, unsigned rows, unsigned cols, std::vector<std::uint32_t> entries);

  static MatrixGFq identity(Field field, unsigned n);
  static MatrixGFq diagonal(Field field, const std::vector<std::uint32_t>& diag);

  const Field& field() const { return field_; }
  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  std::uint32_t operator()(unsigned r, unsigned c) const { return e_[r * cols_ + c]; }
  std::uint32_t& at(unsigned r, unsigned c) { return e_[r * cols_ + c]; }
  const std::vector<std::uint32_t>& entries() const { return e_; }

  friend bool operator==(const MatrixGFq& a, const MatrixGFq& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  Field field_;
  unsigned rows_, cols_;
  std::vector<std::uint32_t> e_;
};

MatrixGFq mat_mul(const MatrixGFq& a, const MatrixGFq& b);
MatrixGFq kron(const MatrixGFq& a, const MatrixGFq& b);
/// Entrywise Frobenius a -> a^(p^s).
MatrixGFq mat_frobenius(const MatrixGFq& a, std::uint64_t s);
bool is_invertible(const MatrixGFq& a);

/// The GF(p)-matrix of M in the power basis {1, w, ..., w^(e-1)} of each
/// GF(q) coordinate. Throws std::domain_error when M is singular.
MatrixGFp blowup(const MatrixGFq& m);

/// The point map v -> (v^(alpha^s)) M on GF(q)^dim, as a permutation of the
/// p^(e*dim) GF(p)-indices. The index of a GF(q)-vector is
/// sum val(v_k) q^k with val the packed field value.
Permutation semilinear_blowup(const MatrixGFq& m, std::uint64_t s);

/// v -> vA on the p^d indices.
Permutation linear_action(const MatrixGFp& a);
/// v -> v + e_k on the p^d indices.
Permutation translation(std::uint32_t p, unsigned dim, unsigned k);

}  // namespace twoclosed
