#pragma once

// Builders for the affine and semilinear group families, Hamming graphs and
// the small named examples.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twoclosed/linalg.hpp"
#include "twoclosed/orbitals.hpp"
#include "twoclosed/permgroup.hpp"

namespace twoclosed {

inline constexpr std::uint64_t kDefaultDegreeBound = 4096;

/// A constructed group with the bookkeeping the analyses need.
struct Construction {
  std::string name;
  PermGroup group;
  /// Family labels (e.g. "B1") with a representative point of the suborbit
  /// they name; map through decompose(...).label for the canonical index.
  std::vector<std::pair<std::string, Point>> labels;
  /// Order of the point stabilizer predicted by the construction.
  Order expected_stabilizer_order = 0;
};

/// Translations by the p^d basis vectors plus the given stabilizer elements.
/// Throws std::invalid_argument if an element does not fix 0 or has the
/// wrong degree.
PermGroup affine_group(std::uint32_t p, unsigned d, const std::vector<Permutation>& stabilizer,
                       const GroupOptions& opts = {});
/// Throws std::domain_error on a singular matrix.
PermGroup affine_group(const std::vector<MatrixGFp>& stabilizer);

/// Generators of GL_m(q): transvections I + c E_ij for c in the power basis
/// of GF(q) over GF(p), and diag(omega, 1, ..., 1).
std::vector<MatrixGFq> gl_generators(const Field& f, unsigned m);
std::vector<MatrixGFp> gl_generators(std::uint32_t p, unsigned m);

/// Permutation of GF(p^d) (by packed value) given by x -> (x w^e)^(p^s),
/// the element w^e a^s of GammaL_1(p^d).
Permutation gammaL1_element(const Field& f, std::int64_t e, std::uint64_t s);

struct StandardForm {
  std::uint32_t p = 0;
  unsigned d = 0;
  std::uint64_t m = 0;
  std::int64_t e = 0;
  std::uint64_t s = 0;
};

/// Throws ValidationError naming the first failing condition of the
/// standard form (m | p^d - 1, s | d, e (p^d-1)/(p^s-1) = 0 mod m).
void validate_standard_form(const StandardForm& sf);

struct GammaL1Subgroup {
  StandardForm form;
  Field field;
  Permutation mult;  // x -> x w^m
  Permutation semi;  // w^e a^s
  Order order;       // ((p^d-1)/m)(d/s)
};

GammaL1Subgroup gammaL1_subgroup(std::uint32_t p, unsigned d, std::uint64_t m, std::int64_t e,
                                 std::uint64_t s);

struct ConditionReport {
  bool ok = false;
  std::vector<std::string> failures;
};

/// The arithmetic conditions for <w^(v m1), w^e a^s> to have exactly two orbits on
/// the non-zero vectors, together with m1 and s odd.
ConditionReport two_orbit_conditions(std::uint32_t p, unsigned d, std::uint64_t m1, std::uint64_t v,
                                     std::int64_t e, std::uint64_t s);

/// N : <w^(3 m1), (w^e a^s)^2> on p^d points. Throws ValidationError when
/// the two-orbit conditions with v = 3 or gcd(m1, 3) = 1 fail.
Construction rank4_gammaL1(std::uint32_t p, unsigned d, std::uint64_t m1, std::int64_t e, std::uint64_t s);

/// V : (D8 o GL_m(3)) on 3^(2m) points. Throws ValidationError for m < 2 or
/// when the degree exceeds the bound.
Construction family_G(unsigned m, std::uint64_t bound = kDefaultDegreeBound);
/// V : (((C3 wr S2) o GL_m(4)).2) on 4^(2m) points.
Construction family_H(unsigned m, std::uint64_t bound = kDefaultDegreeBound);

/// V : (GL_2(q) o GL_m(q)) acting on GF(q)^2 (x) GF(q)^m, on q^(2m) points.
/// Throws ValidationError unless q is a prime power, m >= 1 and the degree
/// is within the bound.
Construction tensor_gl(std::uint32_t q, unsigned m, std::uint64_t bound = kDefaultDegreeBound);
/// V : (GL_m(p) wr C_2) preserving GF(p)^m + GF(p)^m, on p^(2m) points.
Construction gl_wreath(std::uint32_t p, unsigned m, std::uint64_t bound = kDefaultDegreeBound);

/// H(2,k) on k^2 vertices; vertex i + k j is the word (i, j). Throws
/// ValidationError for k < 2.
Digraph hamming_graph(std::uint32_t k);

/// Generators of S_k wr S_2 acting on H(2,k) in the labelling above.
std::vector<Permutation> hamming_wreath_generators(std::uint32_t k);

std::vector<std::string> catalog_names();
/// Throws ValidationError for an unknown name.
Construction catalog(const std::string& name);

/// First (a, b) in row-major order with a^2 + b^2 = -1 mod p; the matrices
/// [[0,1],[-1,0]] and [[a,b],[b,-a]] then generate Q8.
std::pair<std::uint32_t, std::uint32_t> quaternion_parameters(std::uint32_t p);

}  // namespace twoclosed
