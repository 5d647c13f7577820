#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pgrowth {

/// A bijection of {0, ..., d-1}. Printed 1-based in cycle notation.
///
/// Composition follows the "left factor acts first" rule used throughout
/// the library: `p.then(q)` maps i to q(p(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  /// Builds from 1-based images, as written in group spec files.
  static Permutation from_one_based(std::span<const int> images);
  /// Parses cycle notation such as "(1 3 2)" or "(1 2)(3 4)"; "()" is the identity.
  static Permutation from_cycles(std::size_t degree, const std::string& text);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const;

  std::vector<int> one_based() const;
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

}  // namespace pgrowth
