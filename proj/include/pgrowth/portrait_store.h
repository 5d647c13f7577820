#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pgrowth/portrait.h"

namespace pgrowth {

using PortraitId = std::uint32_t;

/// Hash-consed portraits with multiplication done directly on the trees.
///
/// Ids 0..|N|-1 are the nucleus leaves in nucleus order. Every interned
/// portrait is canonical, so two elements are equal iff their ids are equal.
/// Products of two nucleus elements are computed once, through the word
/// problem; every other product is assembled from the rule
/// (gh)_u = g_u h_{g(u)} and collapsed to a leaf when it matches a nucleus
/// decomposition.
class PortraitStore {
 public:
  static constexpr PortraitId kTooDeep = std::numeric_limits<PortraitId>::max();
  static constexpr std::size_t kDefaultNodeBudget = 50'000'000;

  explicit PortraitStore(const GroupSpec& spec, std::size_t node_budget = kDefaultNodeBudget);

  const GroupSpec& spec() const { return spec_; }
  std::size_t size() const { return records_.size(); }
  PortraitId identity() const { return static_cast<PortraitId>(spec_.identity_index()); }

  bool is_leaf(PortraitId id) const { return records_[id].is_leaf; }
  int depth(PortraitId id) const { return records_[id].depth; }
  const Permutation& perm(PortraitId id) const { return perms_[records_[id].perm]; }
  std::span<const PortraitId> children(PortraitId id) const;

  /// Section index of nucleus element `nu` at level-1 vertex `u`.
  std::size_t nucleus_section(std::size_t nu, std::uint32_t u) const { return nucleus_sections_[nu][u]; }

  PortraitId intern(const Portrait& portrait);
  Portrait expand(PortraitId id) const;

  /// Product g * h. Returns kTooDeep if the result is deeper than depth_limit.
  PortraitId multiply(PortraitId lhs, PortraitId rhs, int depth_limit = kDefaultMaxDepth);
  PortraitId from_word(const Word& word);

  LevelPermutation action(const LevelActions& actions, PortraitId id) const;

 private:
  struct Record {
    bool is_leaf = false;
    std::uint8_t depth = 0;
    std::uint32_t perm = 0;
    std::uint64_t first_child = 0;
  };

  std::uint32_t perm_index(const Permutation& perm);
  PortraitId make_node(std::uint32_t perm, std::span<const PortraitId> children);

  const GroupSpec& spec_;
  std::size_t node_budget_;
  WordProblem problem_;
  std::vector<Record> records_;
  std::vector<PortraitId> child_pool_;
  std::vector<Permutation> perms_;
  std::map<Permutation, std::uint32_t> perm_lookup_;
  std::unordered_map<std::string, PortraitId> node_lookup_;
  std::vector<std::vector<std::size_t>> nucleus_sections_;
  std::vector<std::vector<PortraitId>> nucleus_products_;
};

}  // namespace pgrowth
