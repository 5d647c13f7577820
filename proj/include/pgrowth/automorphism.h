#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pgrowth/group_spec.h"

namespace pgrowth {

/// Root permutation of a word. The left factor acts first, so
/// perm(gh) = perm(g) followed by perm(h).
Permutation root_permutation(const GroupSpec& spec, const Word& word);

/// First-level sections, letter by letter: (gh)_u = g_u h_{g(u)}.
/// Words are concatenated without any reduction.
std::vector<Word> sections(const GroupSpec& spec, const Word& word);

/// Section at an arbitrary vertex; the root yields the word itself.
Word section_at(const GroupSpec& spec, const Word& word, const Vertex& vertex);

/// Decides triviality of words in a contracting group.
///
/// A word is trivial iff its root permutation is the identity and all its
/// first-level sections are trivial. The search walks the finite set of
/// freely reduced section words reachable from the input; if none of them has
/// a nontrivial root permutation the word is trivial (greatest fixed point).
///
/// Results are memoized, so an instance should be reused across queries.
/// Not thread-safe; use one instance per thread.
class WordProblem {
 public:
  static constexpr std::size_t kDefaultStateBudget = 1'000'000;

  explicit WordProblem(const GroupSpec& spec, std::size_t state_budget = kDefaultStateBudget);

  const GroupSpec& spec() const { return spec_; }

  /// Throws StateSpaceBudgetExceeded when a single query visits more than the
  /// budget of distinct words.
  bool is_trivial(const Word& word);
  bool are_equal(const Word& lhs, const Word& rhs);
  /// Index of the nucleus element equal to `word`, if any.
  std::optional<std::size_t> nucleus_index(const Word& word);

 private:
  const GroupSpec& spec_;
  std::size_t state_budget_;
  std::unordered_set<std::string> trivial_;
  std::unordered_set<std::string> nontrivial_;
  std::unordered_map<std::string, std::optional<std::size_t>> nucleus_cache_;
  std::vector<Permutation> nucleus_perms_;
};

bool is_trivial(const GroupSpec& spec, const Word& word,
                std::size_t state_budget = WordProblem::kDefaultStateBudget);
bool are_equal(const GroupSpec& spec, const Word& lhs, const Word& rhs,
               std::size_t state_budget = WordProblem::kDefaultStateBudget);

/// Order of the group of root permutations, i.e. |G : st_G(1)|.
std::size_t root_group_order(const GroupSpec& spec);

}  // namespace pgrowth
