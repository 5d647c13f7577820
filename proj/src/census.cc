#include "pgrowth/census.h"

#include <unordered_set>

#include "pgrowth/error.h"

namespace pgrowth {

namespace {

class Tally {
 public:
  Tally(const PortraitStore& store, int n, const CosetClassifier* classifier)
      : store_(store), n_(n), classifier_(classifier), by_depth_(static_cast<std::size_t>(n) + 1, 0) {
    if (classifier_) by_coset_.assign(classifier_->size(), std::vector<std::uint64_t>(by_depth_.size(), 0));
  }

  /// Returns true if the element has depth <= n.
  bool add(PortraitId id) {
    int depth = store_.depth(id);
    if (depth > n_) return false;
    ++by_depth_[static_cast<std::size_t>(depth)];
    if (classifier_) {
      std::size_t coset = classifier_->classify(store_.action(classifier_->actions(), id));
      ++by_coset_[coset][static_cast<std::size_t>(depth)];
    }
    return true;
  }

  void finish(DepthCensus& result) const {
    result.totals = cumulative(by_depth_);
    if (classifier_) {
      std::vector<std::vector<mpz_class>> table;
      for (const auto& row : by_coset_) table.push_back(cumulative(row));
      result.per_coset = std::move(table);
    }
  }

 private:
  static std::vector<mpz_class> cumulative(const std::vector<std::uint64_t>& counts) {
    std::vector<mpz_class> out;
    mpz_class sum = 0;
    for (auto count : counts) {
      sum += static_cast<unsigned long>(count);
      out.push_back(sum);
    }
    return out;
  }

  const PortraitStore& store_;
  int n_;
  const CosetClassifier* classifier_;
  std::vector<std::uint64_t> by_depth_;
  std::vector<std::vector<std::uint64_t>> by_coset_;
};

void check_budget(std::size_t stored, const CensusOptions& options) {
  if (stored > options.element_budget)
    throw Error(ErrorKind::MemoryBudgetExceeded,
                "census stored more than " + std::to_string(options.element_budget) + " elements");
}

std::vector<PortraitId> step_alphabet(PortraitStore& store, int step_length) {
  const std::size_t n_nucleus = store.spec().nucleus().size();
  std::vector<PortraitId> alphabet;
  std::unordered_set<PortraitId> ball{store.identity()};
  std::vector<PortraitId> layer{store.identity()};
  for (int r = 0; r < step_length; ++r) {
    std::vector<PortraitId> next;
    for (PortraitId element : layer)
      for (std::size_t nu = 0; nu < n_nucleus; ++nu) {
        PortraitId product = store.multiply(element, static_cast<PortraitId>(nu));
        if (product == PortraitStore::kTooDeep) throw Error(ErrorKind::DepthBudgetExceeded, "step alphabet too deep");
        if (ball.insert(product).second) {
          next.push_back(product);
          alphabet.push_back(product);
        }
      }
    layer = std::move(next);
  }
  return alphabet;
}

void breadth_first(PortraitStore& store, const CensusOptions& options, Tally& tally, DepthCensus& result) {
  const int limit = options.expand_slack ? options.n + *options.expand_slack : kDefaultMaxDepth;
  const std::vector<PortraitId> alphabet = step_alphabet(store, options.step_length);

  std::unordered_set<PortraitId> seen{store.identity()};
  std::vector<PortraitId> frontier{store.identity()};
  tally.add(store.identity());

  int idle = 0;
  int radius = 0;
  while (!frontier.empty() && radius < options.radius_cap && idle < options.patience) {
    ++radius;
    std::vector<PortraitId> next;
    bool added_shallow = false;
    for (PortraitId element : frontier)
      for (PortraitId step : alphabet) {
        PortraitId product = store.multiply(element, step, limit);
        if (product == PortraitStore::kTooDeep || !seen.insert(product).second) continue;
        check_budget(seen.size(), options);
        next.push_back(product);
        added_shallow = tally.add(product) || added_shallow;
      }
    frontier = std::move(next);
    idle = added_shallow ? 0 : idle + 1;
  }

  result.final_radius = radius;
  result.patience_used = idle;
  result.saturated = frontier.empty() || idle >= options.patience;
  result.elements_visited = seen.size();
}

void product_closure(PortraitStore& store, const CensusOptions& options, Tally& tally, DepthCensus& result) {
  const int limit = options.n + options.expand_slack.value_or(0);
  std::vector<PortraitId> found;
  std::unordered_set<PortraitId> seen;
  for (std::size_t nu = 0; nu < store.spec().nucleus().size(); ++nu) {
    found.push_back(static_cast<PortraitId>(nu));
    seen.insert(static_cast<PortraitId>(nu));
    tally.add(static_cast<PortraitId>(nu));
  }

  // Pairs with both indices below `done` were multiplied in earlier rounds.
  std::size_t done = 0;
  int rounds = 0;
  while (done < found.size() && rounds < options.radius_cap) {
    ++rounds;
    const std::size_t current = found.size();
    for (std::size_t i = 0; i < current; ++i)
      for (std::size_t j = i < done ? done : 0; j < current; ++j)
        for (PortraitId product : {store.multiply(found[i], found[j], limit), store.multiply(found[j], found[i], limit)})
          if (product != PortraitStore::kTooDeep && seen.insert(product).second) {
            check_budget(seen.size(), options);
            found.push_back(product);
            tally.add(product);
          }
    done = current;
  }

  result.final_radius = rounds;
  result.saturated = done == found.size();
  result.elements_visited = found.size();
}

}  // namespace

DepthCensus census(const GroupSpec& spec, const CensusOptions& options, const CosetClassifier* classifier) {
  if (options.n < 0) throw Error(ErrorKind::InvalidArgument, "census depth must be nonnegative");
  if (options.patience < 1) throw Error(ErrorKind::InvalidArgument, "patience must be positive");
  if (options.step_length < 1) throw Error(ErrorKind::InvalidArgument, "step_length must be positive");
  if (options.expand_slack && *options.expand_slack < 0) throw Error(ErrorKind::InvalidArgument, "slack must be nonnegative");
  if (classifier && &classifier->spec() != &spec)
    throw Error(ErrorKind::InvalidArgument, "classifier belongs to a different group spec");

  PortraitStore store(spec, options.node_budget);
  Tally tally(store, options.n, classifier);
  DepthCensus result;
  result.group = spec.name();
  result.n = options.n;
  if (options.strategy == CensusStrategy::BreadthFirst)
    breadth_first(store, options, tally, result);
  else
    product_closure(store, options, tally, result);
  tally.finish(result);
  return result;
}

OracleCensus oracle_census(const GroupSpec& spec, int n, const CosetClassifier* classifier,
                           std::size_t element_budget) {
  CensusOptions options;
  options.n = n;
  options.strategy = CensusStrategy::ProductClosure;
  options.element_budget = element_budget;
  for (int slack : {1, 0}) {
    options.expand_slack = slack;
    try {
      return {census(spec, options, classifier), slack};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::MemoryBudgetExceeded || slack == 0) throw;
    }
  }
  throw Error(ErrorKind::MemoryBudgetExceeded, "census exceeded its element budget");
}

}  // namespace pgrowth
