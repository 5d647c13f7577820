#pragma once

#include <string>
#include <vector>

#include "pgrowth/automorphism.h"
#include "pgrowth/quotient.h"

namespace pgrowth {

/// Nucleus portrait: interior vertices carry root permutations, leaves carry
/// nucleus indices. Portraits are minimal, so equal elements have equal
/// portraits.
class Portrait {
 public:
  static Portrait leaf(std::size_t nucleus_index);
  static Portrait node(Permutation perm, std::vector<Portrait> children);

  bool is_leaf() const { return children_.empty(); }
  std::size_t nucleus_index() const { return leaf_; }
  const Permutation& perm() const { return perm_; }
  const std::vector<Portrait>& children() const { return children_; }

  /// Longest root-to-leaf path; 0 for a leaf.
  int depth() const;

  friend bool operator==(const Portrait&, const Portrait&) = default;

 private:
  std::size_t leaf_ = 0;
  Permutation perm_;
  std::vector<Portrait> children_;
};

constexpr int kDefaultMaxDepth = 64;

/// Leaf if the word equals a nucleus element, otherwise a node holding the
/// root permutation and the portraits of the first-level sections.
/// Throws DepthBudgetExceeded past max_depth.
Portrait build_portrait(WordProblem& problem, const Word& word, int max_depth = kDefaultMaxDepth);
Portrait build_portrait(const GroupSpec& spec, const Word& word, int max_depth = kDefaultMaxDepth);

int depth(const GroupSpec& spec, const Word& word);

/// Injective preorder serialization. Leaves: tag 'L' then a varint index.
/// Nodes: tag 'N', degree varint, the images, then the children.
std::string canonical_key(const Portrait& portrait);

/// Action on level `actions.level()` of the element the portrait describes,
/// with leaves expanded through their nucleus words.
LevelPermutation portrait_action(const LevelActions& actions, const Portrait& portrait);

std::string render_ascii(const GroupSpec& spec, const Portrait& portrait);
std::string render_dot(const GroupSpec& spec, const Portrait& portrait);

}  // namespace pgrowth
