#ifndef THUELAB_PERMUTATION_HPP
#define THUELAB_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace thuelab {

/// Multiset of cycle lengths of a permutation (a partition of the degree),
/// stored sorted descending. Fixed points contribute 1s.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<unsigned> lengths);

  const std::vector<unsigned>& lengths() const { return lengths_; }
  unsigned degree() const;          // sum of lengths
  std::size_t cycle_count() const { return lengths_.size(); }
  std::uint64_t order() const;      // lcm of lengths

  std::string to_string() const;    // "[4,2,1]"

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;

 private:
  std::vector<unsigned> lengths_;
};

/// A bijection of {1,...,n}. Points are 1-based in every external format;
/// storage is 0-based. Values are immutable after construction.
///
/// Composition convention, fixed project-wide: compose(p, q) applies p
/// first, then q, i.e. compose(p, q)(x) = q(p(x)).
class Permutation {
 public:
  Permutation() = default;                    // degree-0 placeholder
  explicit Permutation(unsigned degree);      // identity

  /// Build from 1-based image list: images[i-1] is the image of point i.
  static Permutation from_images(unsigned degree, const std::vector<unsigned>& images);

  /// Build from disjoint cycles of 1-based points; unlisted points stay fixed.
  /// Throws std::invalid_argument on out-of-range or repeated points.
  static Permutation from_cycles(unsigned degree, const std::vector<std::vector<unsigned>>& cycles);

  /// Parse textual cycle notation, e.g. "(1 2 3 4)(5 6)" or "()" for the identity.
  /// Commas are accepted as separators inside a cycle.
  static Permutation parse_cycles(unsigned degree, std::string_view text);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  unsigned apply(unsigned point) const { return img_[point - 1] + 1; }  // 1-based

  bool is_identity() const;

  Permutation inverse() const;

  CycleType cycle_type() const;
  std::uint64_t order() const { return cycle_type().order(); }

  /// Cycles of length >= 2, each rotated to start at its smallest point,
  /// listed by smallest point. 1-based.
  std::vector<std::vector<unsigned>> cycles() const;

  /// Cycle notation; "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  const std::vector<std::uint16_t>& raw() const { return img_; }

 private:
  std::vector<std::uint16_t> img_;  // img_[i] = image of point i, 0-based
};

/// Apply p first, then q. Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

/// Conjugate of p by g: apply(g^-1 p g), so cycles of p are relabeled through g.
Permutation conjugate(const Permutation& p, const Permutation& g);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace thuelab

#endif
