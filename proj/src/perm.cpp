#include "twoclosed/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace twoclosed {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y]) throw std::invalid_argument("Permutation: not a bijection");
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Point> im(n);
  std::iota(im.begin(), im.end(), Point{0});
  return Permutation(std::move(im), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> im(n);
  std::iota(im.begin(), im.end(), Point{0});
  std::vector<bool> used(n, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Point x = cyc[i];
      if (x >= n || used[x]) throw std::invalid_argument("from_cycles: bad cycle");
      used[x] = true;
      im[x] = cyc[(i + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(im), Unchecked{});
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw std::invalid_argument("Permutation: degree mismatch");
  std::vector<Point> im(images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = rhs.images_[images_[i]];
  return Permutation(std::move(im), Unchecked{});
}

Permutation& Permutation::operator*=(const Permutation& rhs) {
  if (rhs.degree() != degree()) throw std::invalid_argument("Permutation: degree mismatch");
  for (auto& y : images_) y = rhs.images_[y];
  return *this;
}

Permutation Permutation::inverse() const {
  std::vector<Point> im(images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(im), Unchecked{});
}

bool Permutation::is_identity() const { return first_moved() == degree(); }

Point Permutation::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (Point x = 0; x < degree(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out += '(';
    for (Point y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (y != x) out += ' ';
      out += std::to_string(y);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace twoclosed
