#include "pgrowth/portrait_store.h"

#include <algorithm>
#include <cstring>

#include "pgrowth/error.h"

namespace pgrowth {

namespace {

std::string node_key(std::uint32_t perm, std::span<const PortraitId> children) {
  std::string key(sizeof(std::uint32_t) * (children.size() + 1), '\0');
  std::memcpy(key.data(), &perm, sizeof perm);
  std::memcpy(key.data() + sizeof perm, children.data(), children.size() * sizeof(PortraitId));
  return key;
}

}  // namespace

PortraitStore::PortraitStore(const GroupSpec& spec, std::size_t node_budget)
    : spec_(spec), node_budget_(node_budget), problem_(spec) {
  const auto& nucleus = spec_.nucleus();
  for (const Word& nu : nucleus) records_.push_back(Record{true, 0, perm_index(root_permutation(spec_, nu)), 0});

  for (std::size_t nu = 0; nu < nucleus.size(); ++nu) {
    std::vector<std::size_t> row;
    for (const Word& section : sections(spec_, nucleus[nu])) {
      auto index = problem_.nucleus_index(section);
      if (!index)
        throw Error(ErrorKind::InvalidSpec, "nucleus is not closed under sections: " + spec_.format(nucleus[nu]) +
                                                " has section " + spec_.format(section));
      row.push_back(*index);
    }
    nucleus_sections_.push_back(std::move(row));
  }

  // A node with all-leaf children equal to a nucleus decomposition must
  // collapse to that leaf.
  for (std::size_t nu = 0; nu < nucleus.size(); ++nu) {
    std::vector<PortraitId> children(nucleus_sections_[nu].begin(), nucleus_sections_[nu].end());
    node_lookup_.emplace(node_key(records_[nu].perm, children), static_cast<PortraitId>(nu));
  }

  nucleus_products_.assign(nucleus.size(), std::vector<PortraitId>(nucleus.size()));
  for (std::size_t mu = 0; mu < nucleus.size(); ++mu)
    for (std::size_t nu = 0; nu < nucleus.size(); ++nu)
      nucleus_products_[mu][nu] = intern(build_portrait(problem_, nucleus[mu] * nucleus[nu]));
}

std::span<const PortraitId> PortraitStore::children(PortraitId id) const {
  const Record& record = records_[id];
  if (record.is_leaf) return {};
  return {child_pool_.data() + record.first_child, spec_.degree()};
}

std::uint32_t PortraitStore::perm_index(const Permutation& perm) {
  auto [it, inserted] = perm_lookup_.emplace(perm, static_cast<std::uint32_t>(perms_.size()));
  if (inserted) perms_.push_back(perm);
  return it->second;
}

PortraitId PortraitStore::make_node(std::uint32_t perm, std::span<const PortraitId> children) {
  std::string key = node_key(perm, children);
  if (auto it = node_lookup_.find(key); it != node_lookup_.end()) return it->second;
  if (records_.size() >= node_budget_)
    throw Error(ErrorKind::MemoryBudgetExceeded, "portrait store exceeded " + std::to_string(node_budget_) + " nodes");

  int deepest = 0;
  for (PortraitId child : children) deepest = std::max(deepest, static_cast<int>(records_[child].depth));
  if (deepest + 1 > 255) throw Error(ErrorKind::DepthBudgetExceeded, "portrait depth exceeds 255");

  Record record{false, static_cast<std::uint8_t>(deepest + 1), perm, child_pool_.size()};
  child_pool_.insert(child_pool_.end(), children.begin(), children.end());
  auto id = static_cast<PortraitId>(records_.size());
  records_.push_back(record);
  node_lookup_.emplace(std::move(key), id);
  return id;
}

PortraitId PortraitStore::intern(const Portrait& portrait) {
  if (portrait.is_leaf()) return static_cast<PortraitId>(portrait.nucleus_index());
  std::vector<PortraitId> children;
  for (const Portrait& child : portrait.children()) children.push_back(intern(child));
  return make_node(perm_index(portrait.perm()), children);
}

Portrait PortraitStore::expand(PortraitId id) const {
  if (is_leaf(id)) return Portrait::leaf(id);
  std::vector<Portrait> children;
  for (PortraitId child : this->children(id)) children.push_back(expand(child));
  return Portrait::node(perm(id), std::move(children));
}

PortraitId PortraitStore::multiply(PortraitId lhs, PortraitId rhs, int depth_limit) {
  if (depth_limit < 0) return kTooDeep;
  if (is_leaf(lhs) && is_leaf(rhs)) {
    PortraitId product = nucleus_products_[lhs][rhs];
    return depth(product) <= depth_limit ? product : kTooDeep;
  }
  if (depth_limit == 0) return kTooDeep;

  const std::size_t d = spec_.degree();
  const Permutation& lhs_perm = perm(lhs);
  Permutation product_perm = lhs_perm.then(perm(rhs));

  std::vector<PortraitId> children(d);
  for (std::uint32_t u = 0; u < d; ++u) {
    std::uint32_t moved = lhs_perm(u);
    PortraitId left = is_leaf(lhs) ? static_cast<PortraitId>(nucleus_sections_[lhs][u]) : this->children(lhs)[u];
    PortraitId right =
        is_leaf(rhs) ? static_cast<PortraitId>(nucleus_sections_[rhs][moved]) : this->children(rhs)[moved];
    PortraitId child = multiply(left, right, depth_limit - 1);
    if (child == kTooDeep) return kTooDeep;
    children[u] = child;
  }
  // make_node finds nucleus decompositions through the same lookup table.
  return make_node(perm_index(product_perm), children);
}

PortraitId PortraitStore::from_word(const Word& word) {
  PortraitId current = identity();
  for (const Letter& letter : word.letters()) {
    PortraitId factor = intern(build_portrait(problem_, Word({letter})));
    current = multiply(current, factor);
    if (current == kTooDeep) throw Error(ErrorKind::DepthBudgetExceeded, "product deeper than the depth budget");
  }
  return current;
}

LevelPermutation PortraitStore::action(const LevelActions& actions, PortraitId id) const {
  return portrait_action(actions, expand(id));
}

}  // namespace pgrowth
