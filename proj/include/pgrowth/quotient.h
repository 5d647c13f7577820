#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "pgrowth/group_spec.h"

namespace pgrowth {

/// The permutation an automorphism induces on the d^m vertices of level m.
/// Vertex u_1...u_m (0-based letters) has index u_1 d^(m-1) + ... + u_m.
/// Actions on shallower levels are projections, so they are not stored.
class LevelPermutation {
 public:
  LevelPermutation() = default;
  LevelPermutation(std::size_t degree, int level, std::vector<std::uint32_t> images);

  static LevelPermutation identity(std::size_t degree, int level);

  std::size_t degree() const { return degree_; }
  int level() const { return level_; }
  const std::vector<std::uint32_t>& images() const { return images_; }
  std::uint32_t operator()(std::uint32_t vertex) const { return images_[vertex]; }

  /// Left factor acts first.
  LevelPermutation then(const LevelPermutation& next) const;
  LevelPermutation inverse() const;
  bool is_identity() const;
  /// Induced action on a shallower level.
  LevelPermutation project(int level) const;

  friend bool operator==(const LevelPermutation& lhs, const LevelPermutation& rhs) {
    return lhs.images_ == rhs.images_;
  }

 private:
  std::size_t degree_ = 2;
  int level_ = 0;
  std::vector<std::uint32_t> images_{0};
};

struct LevelPermutationHash {
  std::size_t operator()(const LevelPermutation& perm) const noexcept;
};

/// Generator actions on levels 0..m, computed bottom-up from the wreath
/// recursion. Cheap to copy around by reference; immutable after construction.
class LevelActions {
 public:
  LevelActions(const GroupSpec& spec, int level);

  const GroupSpec& spec() const { return spec_; }
  int level() const { return level_; }
  LevelPermutation of(const Word& word) const { return of(word, level_); }
  LevelPermutation of(const Word& word, int level) const;
  const LevelPermutation& of_letter(Letter letter, int level) const;

 private:
  const GroupSpec& spec_;
  int level_;
  // [level][2 * generator + inverse]
  std::vector<std::vector<LevelPermutation>> letters_;
};

LevelPermutation truncated_action(const GroupSpec& spec, const Word& word, int level);

/// Image of a normal subgroup K in the finite quotient G / st_G(m).
struct QuotientTable {
  int level = 1;
  std::vector<Word> seeds;
  std::unordered_set<LevelPermutation, LevelPermutationHash> elements;
  std::vector<LevelPermutation> generator_images;
  std::size_t ambient_order = 1;
  bool closed_under_product = false;
  bool closed_under_conjugation = false;

  std::size_t size() const { return elements.size(); }
  std::size_t ambient_index() const { return ambient_order / elements.size(); }
  bool contains(const LevelPermutation& perm) const { return elements.contains(perm); }
};

constexpr std::size_t kDefaultQuotientBudget = 4'000'000;

/// Order of G / st_G(m), by closure of the generator images.
std::size_t ambient_order(const GroupSpec& spec, int level, std::size_t size_budget = kDefaultQuotientBudget);

/// Normal closure of the seed images inside G / st_G(m): closed under
/// products and under conjugation by the generator images.
QuotientTable normal_closure_image(const GroupSpec& spec, const std::vector<Word>& seeds, int level,
                                   std::size_t size_budget = kDefaultQuotientBudget);

/// Classifies elements into the cosets t_i K of a transversal, at the level
/// of the quotient table. Exact only when st_G(m) <= K.
class CosetClassifier {
 public:
  /// Throws AmbiguousTransversal if two transversal words share a coset.
  /// `table` must outlive the classifier.
  CosetClassifier(const GroupSpec& spec, const QuotientTable& table, std::vector<Word> transversal);

  const GroupSpec& spec() const { return actions_.spec(); }
  const LevelActions& actions() const { return actions_; }
  const QuotientTable& table() const { return table_; }
  const std::vector<Word>& transversal() const { return transversal_; }
  std::size_t size() const { return transversal_.size(); }

  /// Index i with t_i^-1 w in K. Throws NoCoset when there is none.
  std::size_t classify(const Word& word) const;
  std::size_t classify(const LevelPermutation& image) const;

 private:
  LevelActions actions_;
  const QuotientTable& table_;
  std::vector<Word> transversal_;
  std::vector<LevelPermutation> inverse_images_;
};

std::size_t coset_of(const GroupSpec& spec, const Word& word, const QuotientTable& table,
                     const std::vector<Word>& transversal);

/// Coset of the even-length subgroup: 0 for even word length, 1 for odd.
std::size_t parity_coset(const Word& word);

}  // namespace pgrowth
