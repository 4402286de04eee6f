#ifndef LUI_PERMUTATION_HPP
#define LUI_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lui {

/// Element of the symmetric group S_k. Points are 0-based internally;
/// the text syntax (cycle notation) is 1-based.
class Permutation {
public:
  Permutation() = default; // degree 0
  /// Identity on k points.
  explicit Permutation(std::size_t k);

  /// Construct from an image table: images[x] = pi(x), 0-based. Validates bijectivity.
  static Permutation from_images(std::vector<std::uint8_t> images);

  /// Construct from disjoint cycles over 1-based points.
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles, std::size_t k);

  /// Parse cycle notation: "(1 2 3)(4 5)", "id" or "()" for the identity.
  /// degree 0 means "infer from the largest point" (at least 1).
  static Permutation parse(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const { return images_.size(); }
  std::uint8_t operator()(std::uint8_t x) const { return images_[x]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Composition: (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  /// conjugate_by(tau) = tau^-1 * (*this) * tau.
  Permutation conjugate_by(const Permutation& tau) const;

  /// Disjoint cycles over 1-based points; each cycle starts at its smallest
  /// point, cycles sorted by smallest point. Includes fixed points.
  std::vector<std::vector<int>> cycles() const;

  /// Cycle notation. By default fixed points are omitted and the identity
  /// prints as "id"; with_fixed_points prints every cycle, e.g. "(1)(2 3)".
  std::string str(bool with_fixed_points = false) const;

  /// Lehmer rank in [0, k!). Requires k <= 20.
  std::uint64_t rank() const;
  static Permutation unrank(std::uint64_t r, std::size_t k);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<std::uint8_t> images_;
};

/// N-tuple of permutations sharing one degree k; indexes an invariant.
class PermTuple {
public:
  explicit PermTuple(std::vector<Permutation> parts);

  /// Parse ";"-joined cycle notations, e.g. "(1 2 3)(4 5);(1 2 4 5 6)".
  /// degree 0 infers the common degree from the largest point overall.
  static PermTuple parse(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const { return degree_; }
  std::size_t parts() const { return parts_.size(); }
  const Permutation& part(std::size_t i) const { return parts_[i]; }
  const std::vector<Permutation>& all_parts() const { return parts_; }

  PermTuple conjugate_by(const Permutation& tau) const;
  PermTuple inverse() const;

  std::string str() const;

  /// Orders by part 1's image array, then part 2's, and so on.
  friend bool operator==(const PermTuple&, const PermTuple&) = default;
  friend std::strong_ordering operator<=>(const PermTuple& a, const PermTuple& b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::size_t degree_;
  std::vector<Permutation> parts_;
};

std::uint64_t factorial(std::size_t k);

} // namespace lui

#endif
