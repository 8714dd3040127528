#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gtrace {

/// A permutation of {1..degree}, stored 0-based. Composition is right-to-left:
/// (a * b)(x) = a(b(x)), so permutations act on points from the left.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::uint32_t degree);

  /// Parses disjoint cycle notation over points 1..degree, e.g. "(1 2 3)(4 5)".
  /// "()" is the identity. Points inside a cycle may be separated by blanks or commas.
  static Permutation parse(std::string_view text, std::uint32_t degree);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::uint64_t order() const;

  /// Canonical cycle notation: cycles start at their least point and are sorted
  /// by it; fixed points are omitted; the identity prints as "()".
  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  // lexicographic on image sequences
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<std::uint32_t> images_;
};

}  // namespace gtrace
