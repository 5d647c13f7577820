#include "pgrowth/automorphism.h"

#include <deque>
#include <set>

#include "pgrowth/error.h"

namespace pgrowth {

Permutation root_permutation(const GroupSpec& spec, const Word& word) {
  std::vector<std::uint32_t> images(spec.degree());
  for (std::uint32_t u = 0; u < spec.degree(); ++u) {
    std::uint32_t v = u;
    for (const Letter& letter : word.letters()) v = spec.letter_perm(letter)(v);
    images[u] = v;
  }
  return Permutation(std::move(images));
}

std::vector<Word> sections(const GroupSpec& spec, const Word& word) {
  std::vector<Word> out(spec.degree());
  for (std::uint32_t u = 0; u < spec.degree(); ++u) {
    std::uint32_t v = u;
    for (const Letter& letter : word.letters()) {
      out[u].append(spec.letter_section(letter, v));
      v = spec.letter_perm(letter)(v);
    }
  }
  return out;
}

Word section_at(const GroupSpec& spec, const Word& word, const Vertex& vertex) {
  Word current = word;
  for (std::uint32_t step : vertex.path) {
    if (step >= spec.degree()) throw Error(ErrorKind::BadVertex, "vertex entry out of range");
    current = sections(spec, current)[step];
  }
  return current;
}

WordProblem::WordProblem(const GroupSpec& spec, std::size_t state_budget) : spec_(spec), state_budget_(state_budget) {
  for (const Word& nu : spec_.nucleus()) nucleus_perms_.push_back(root_permutation(spec_, nu));
}

bool WordProblem::is_trivial(const Word& word) {
  Word start = word.freely_reduced();
  std::string start_key = start.key();
  if (start.empty() || trivial_.contains(start_key)) return true;
  if (nontrivial_.contains(start_key)) return false;

  std::unordered_set<std::string> visited{start_key};
  std::vector<std::string> visited_order{start_key};
  std::deque<Word> queue{std::move(start)};
  while (!queue.empty()) {
    Word current = std::move(queue.front());
    queue.pop_front();
    std::string current_key = current.key();
    if (nontrivial_.contains(current_key) || !root_permutation(spec_, current).is_identity()) {
      nontrivial_.insert(start_key);
      return false;
    }
    for (Word& section : sections(spec_, current)) {
      Word reduced = section.freely_reduced();
      if (reduced.empty()) continue;
      std::string key = reduced.key();
      if (trivial_.contains(key) || visited.contains(key)) continue;
      if (visited.size() >= state_budget_)
        throw Error(ErrorKind::StateSpaceBudgetExceeded,
                    "triviality search exceeded " + std::to_string(state_budget_) + " states");
      visited.insert(key);
      visited_order.push_back(key);
      queue.push_back(std::move(reduced));
    }
  }
  // Every reachable state acts trivially at the root: all of them are trivial.
  for (std::string& key : visited_order) trivial_.insert(std::move(key));
  return true;
}

bool WordProblem::are_equal(const Word& lhs, const Word& rhs) { return is_trivial(lhs * inverse_word(rhs)); }

std::optional<std::size_t> WordProblem::nucleus_index(const Word& word) {
  Word reduced = word.freely_reduced();
  std::string key = reduced.key();
  if (auto it = nucleus_cache_.find(key); it != nucleus_cache_.end()) return it->second;

  std::optional<std::size_t> found;
  Permutation perm = root_permutation(spec_, reduced);
  for (std::size_t i = 0; i < spec_.nucleus().size(); ++i) {
    if (nucleus_perms_[i] != perm) continue;
    if (are_equal(reduced, spec_.nucleus()[i])) {
      found = i;
      break;
    }
  }
  nucleus_cache_.emplace(std::move(key), found);
  return found;
}

bool is_trivial(const GroupSpec& spec, const Word& word, std::size_t state_budget) {
  return WordProblem(spec, state_budget).is_trivial(word);
}

bool are_equal(const GroupSpec& spec, const Word& lhs, const Word& rhs, std::size_t state_budget) {
  return WordProblem(spec, state_budget).are_equal(lhs, rhs);
}

std::size_t root_group_order(const GroupSpec& spec) {
  std::set<Permutation> group{Permutation::identity(spec.degree())};
  std::deque<Permutation> queue{Permutation::identity(spec.degree())};
  while (!queue.empty()) {
    Permutation current = queue.front();
    queue.pop_front();
    for (const Generator& gen : spec.generators()) {
      Permutation next = current.then(gen.perm);
      if (group.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return group.size();
}

}  // namespace pgrowth
