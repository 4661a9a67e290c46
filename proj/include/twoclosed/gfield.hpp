#pragma once

// Arithmetic in GF(p^d) with a fixed primitive modulus.
//
// Elements are stored packed: the coefficient vector (c0, ..., c_{d-1}) of
// the residue c0 + c1 x + ... + c_{d-1} x^{d-1} is encoded as the integer
// c0 + c1 p + ... + c_{d-1} p^{d-1}. The same integer is the point index of
// the vector under the global coordinate convention, so a field element and
// the affine point it names share one number.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace twoclosed {

inline constexpr std::uint64_t kDefaultFieldBound = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n);
std::uint64_t ipow(std::uint64_t base, unsigned exp);

class FieldSpec {
 public:
  std::uint32_t p() const { return p_; }
  unsigned d() const { return d_; }
  std::uint32_t card() const { return card_; }
  /// Monic modulus, constant term first (length d + 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// a^(p^s)
  std::uint32_t frobenius(std::uint32_t a, std::uint64_t s) const;
  /// omega^k, k taken modulo card - 1.
  std::uint32_t omega_pow(std::int64_t k) const;
  std::uint32_t log(std::uint32_t a) const;

  std::vector<std::uint32_t> coeffs(std::uint32_t a) const;
  std::uint32_t pack(const std::vector<std::uint32_t>& coeffs) const;

 private:
  friend std::shared_ptr<const FieldSpec> make_field(std::uint32_t, unsigned, std::uint64_t);
  FieldSpec() = default;

  std::uint32_t p_ = 0;
  unsigned d_ = 0;
  std::uint32_t card_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // exp_[k] = omega^k, k < card - 1
  std::vector<std::uint32_t> log_;  // log_[0] unused
};

using Field = std::shared_ptr<const FieldSpec>;

/// Builds GF(p^d) over the lexicographically least primitive monic modulus
/// (coefficient tuples (c_{d-1}, ..., c0) compared with 0 < 1 < ... < p-1).
/// For d = 1 the modulus is x - g with g the least primitive root mod p.
Field make_field(std::uint32_t p, unsigned d, std::uint64_t bound = kDefaultFieldBound);

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FieldSpec* spec, std::uint32_t value) : spec_(spec), value_(value) {}

  const FieldSpec* spec() const { return spec_; }
  std::uint32_t value() const { return value_; }
  std::vector<std::uint32_t> coeffs() const { return spec_->coeffs(value_); }
  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.spec_ == b.spec_ && a.value_ == b.value_;
  }

 private:
  const FieldSpec* spec_ = nullptr;
  std::uint32_t value_ = 0;
};

FieldElement fzero(const Field& f);
FieldElement fone(const Field& f);
/// The primitive element omega (the residue class of x).
FieldElement fomega(const Field& f);
FieldElement felem(const Field& f, const std::vector<std::uint32_t>& coeffs);

FieldElement fadd(const FieldElement& a, const FieldElement& b);
FieldElement fsub(const FieldElement& a, const FieldElement& b);
FieldElement fneg(const FieldElement& a);
FieldElement fmul(const FieldElement& a, const FieldElement& b);
FieldElement finv(const FieldElement& a);
FieldElement fpow(const FieldElement& a, std::uint64_t e);
FieldElement frobenius(const FieldElement& a, std::uint64_t s);
std::uint32_t discrete_log(const FieldElement& a);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return fadd(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return fsub(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return fmul(a, b); }

}  // namespace twoclosed
