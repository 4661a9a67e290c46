#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace twoclosed {

using Point = std::uint32_t;

/// A permutation of {0, ..., n-1} stored as its image array. Products act on
/// the right: (a * b)[x] = b[a[x]].
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t n);
  /// Cycles over 0-based points; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation& operator*=(const Permutation& rhs);
  Permutation inverse() const;
  bool is_identity() const;
  /// Smallest moved point, or degree() when the permutation is the identity.
  Point first_moved() const;

  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

}  // namespace twoclosed
