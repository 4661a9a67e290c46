#include "twoclosed/gfield.hpp"

#include <cassert>
#include <string>

#include "twoclosed/errors.hpp"

namespace twoclosed {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

namespace {

// Tries to use `low` (packed c0..c_{d-1}) as the lower coefficients of a monic
// modulus. On success fills exp/log and returns true.
bool try_primitive(std::uint32_t p, unsigned d, std::uint32_t card, std::uint32_t low,
                   std::vector<std::uint32_t>& exp, std::vector<std::uint32_t>& log) {
  std::vector<std::uint32_t> c(d);
  for (unsigned i = 0, t = low; i < d; ++i, t /= p) c[i] = t % p;
  if (c[0] == 0) return false;

  const std::uint32_t order = card - 1;
  exp.assign(order, 0);
  log.assign(card, 0);
  std::vector<std::uint32_t> cur(d, 0);
  cur[0] = 1;
  std::uint32_t packed = 1;
  for (std::uint32_t k = 0; k < order; ++k) {
    if (k > 0 && packed == 1) return false;
    exp[k] = packed;
    log[packed] = k;
    // cur *= x mod f
    std::uint32_t top = cur[d - 1];
    for (unsigned i = d - 1; i > 0; --i)
      cur[i] = static_cast<std::uint32_t>((cur[i - 1] + std::uint64_t{p - top} * c[i]) % p);
    cur[0] = static_cast<std::uint32_t>((std::uint64_t{p - top} * c[0]) % p);
    packed = 0;
    for (unsigned i = d; i-- > 0;) packed = packed * p + cur[i];
  }
  return packed == 1;
}

}  // namespace

Field make_field(std::uint32_t p, unsigned d, std::uint64_t bound) {
  if (!is_prime(p)) throw ValidationError("make_field: " + std::to_string(p) + " is not prime");
  if (d < 1) throw ValidationError("make_field: degree must be positive");
  std::uint64_t card = 1;
  for (unsigned i = 0; i < d; ++i) {
    card *= p;
    if (card > bound)
      throw ValidationError("make_field: field size exceeds bound " + std::to_string(bound));
  }

  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->p_ = p;
  spec->d_ = d;
  spec->card_ = static_cast<std::uint32_t>(card);

  if (d == 1) {
    // x - g for the least primitive root g.
    for (std::uint32_t g = 1; g < p; ++g) {
      std::uint32_t low = (p - g) % p;
      if (try_primitive(p, 1, spec->card_, low, spec->exp_, spec->log_)) {
        spec->modulus_ = {low, 1};
        return spec;
      }
    }
  } else {
    for (std::uint32_t low = 0; low < card; ++low) {
      if (try_primitive(p, d, spec->card_, low, spec->exp_, spec->log_)) {
        spec->modulus_.resize(d + 1);
        for (unsigned i = 0, t = low; i < d; ++i, t /= p) spec->modulus_[i] = t % p;
        spec->modulus_[d] = 1;
        return spec;
      }
    }
  }
  throw std::logic_error("make_field: no primitive polynomial found");
}

std::uint32_t FieldSpec::add(std::uint32_t a, std::uint32_t b) const {
  if (d_ == 1) return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p_);
  std::uint32_t r = 0, scale = 1;
  for (unsigned i = 0; i < d_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

std::uint32_t FieldSpec::neg(std::uint32_t a) const {
  std::uint32_t r = 0, scale = 1;
  for (unsigned i = 0; i < d_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

std::uint32_t FieldSpec::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  std::uint64_t k = std::uint64_t{log_[a]} + log_[b];
  return exp_[k % (card_ - 1)];
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("finv: zero has no inverse");
  return exp_[(card_ - 1 - log_[a]) % (card_ - 1)];
}

std::uint32_t FieldSpec::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  std::uint64_t k = (std::uint64_t{log_[a]} * (e % (card_ - 1))) % (card_ - 1);
  return exp_[k];
}

std::uint32_t FieldSpec::frobenius(std::uint32_t a, std::uint64_t s) const {
  if (a == 0) return 0;
  std::uint64_t k = log_[a];
  for (std::uint64_t i = 0; i < s % d_; ++i) k = (k * p_) % (card_ - 1);
  return exp_[k];
}

std::uint32_t FieldSpec::omega_pow(std::int64_t k) const {
  std::int64_t order = card_ - 1;
  std::int64_t r = k % order;
  if (r < 0) r += order;
  return exp_[static_cast<std::size_t>(r)];
}

std::uint32_t FieldSpec::log(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("discrete_log: zero has no logarithm");
  return log_[a];
}

std::vector<std::uint32_t> FieldSpec::coeffs(std::uint32_t a) const {
  std::vector<std::uint32_t> c(d_);
  for (unsigned i = 0; i < d_; ++i, a /= p_) c[i] = a % p_;
  return c;
}

std::uint32_t FieldSpec::pack(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() != d_) throw std::invalid_argument("pack: wrong coefficient count");
  std::uint32_t r = 0;
  for (unsigned i = d_; i-- > 0;) r = r * p_ + coeffs[i] % p_;
  return r;
}

FieldElement fzero(const Field& f) { return {f.get(), 0}; }
FieldElement fone(const Field& f) { return {f.get(), 1}; }
FieldElement fomega(const Field& f) { return {f.get(), f->omega_pow(1)}; }
FieldElement felem(const Field& f, const std::vector<std::uint32_t>& coeffs) {
  return {f.get(), f->pack(coeffs)};
}

FieldElement fadd(const FieldElement& a, const FieldElement& b) {
  assert(a.spec() == b.spec() && "mixed-field arithmetic");
  return {a.spec(), a.spec()->add(a.value(), b.value())};
}
FieldElement fsub(const FieldElement& a, const FieldElement& b) { return fadd(a, fneg(b)); }
FieldElement fneg(const FieldElement& a) { return {a.spec(), a.spec()->neg(a.value())}; }
FieldElement fmul(const FieldElement& a, const FieldElement& b) {
  assert(a.spec() == b.spec() && "mixed-field arithmetic");
  return {a.spec(), a.spec()->mul(a.value(), b.value())};
}
FieldElement finv(const FieldElement& a) { return {a.spec(), a.spec()->inv(a.value())}; }
FieldElement fpow(const FieldElement& a, std::uint64_t e) {
  return {a.spec(), a.spec()->pow(a.value(), e)};
}
FieldElement frobenius(const FieldElement& a, std::uint64_t s) {
  return {a.spec(), a.spec()->frobenius(a.value(), s)};
}
std::uint32_t discrete_log(const FieldElement& a) { return a.spec()->log(a.value()); }

}  // namespace twoclosed
