#include "pgrowth/quotient.h"

#include <deque>

#include "pgrowth/error.h"

namespace pgrowth {

namespace {

std::size_t power(std::size_t base, int exponent) {
  std::size_t out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace

LevelPermutation::LevelPermutation(std::size_t degree, int level, std::vector<std::uint32_t> images)
    : degree_(degree), level_(level), images_(std::move(images)) {
  if (images_.size() != power(degree_, level_))
    throw Error(ErrorKind::InvalidArgument, "level permutation has the wrong number of images");
}

LevelPermutation LevelPermutation::identity(std::size_t degree, int level) {
  std::vector<std::uint32_t> images(power(degree, level));
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = static_cast<std::uint32_t>(i);
  return LevelPermutation(degree, level, std::move(images));
}

LevelPermutation LevelPermutation::then(const LevelPermutation& next) const {
  LevelPermutation out = *this;
  for (auto& image : out.images_) image = next.images_[image];
  return out;
}

LevelPermutation LevelPermutation::inverse() const {
  LevelPermutation out = *this;
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<std::uint32_t>(i);
  return out;
}

bool LevelPermutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

LevelPermutation LevelPermutation::project(int level) const {
  if (level < 0 || level > level_) throw Error(ErrorKind::InvalidArgument, "cannot project to a deeper level");
  std::size_t block = power(degree_, level_ - level);
  std::vector<std::uint32_t> images(power(degree_, level));
  for (std::size_t v = 0; v < images.size(); ++v)
    images[v] = static_cast<std::uint32_t>(images_[v * block] / block);
  return LevelPermutation(degree_, level, std::move(images));
}

std::size_t LevelPermutationHash::operator()(const LevelPermutation& perm) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto image : perm.images()) {
    h ^= image;
    h *= 1099511628211ull;
  }
  return h;
}

LevelActions::LevelActions(const GroupSpec& spec, int level) : spec_(spec), level_(level) {
  if (level < 0) throw Error(ErrorKind::InvalidArgument, "level must be nonnegative");
  const std::size_t d = spec.degree();
  const std::size_t n_letters = 2 * spec.generators().size();
  letters_.resize(static_cast<std::size_t>(level) + 1);
  letters_[0].assign(n_letters, LevelPermutation::identity(d, 0));
  for (int k = 1; k <= level; ++k) {
    const std::size_t block = power(d, k - 1);
    letters_[k].reserve(n_letters);
    for (std::size_t code = 0; code < n_letters; ++code) {
      Letter letter{static_cast<std::uint16_t>(code / 2), code % 2 == 1};
      const Permutation& root = spec.letter_perm(letter);
      std::vector<std::uint32_t> images(block * d);
      for (std::uint32_t top = 0; top < d; ++top) {
        LevelPermutation below = of(spec.letter_section(letter, top), k - 1);
        for (std::size_t rest = 0; rest < block; ++rest)
          images[top * block + rest] = static_cast<std::uint32_t>(root(top) * block + below(static_cast<std::uint32_t>(rest)));
      }
      letters_[k].emplace_back(d, k, std::move(images));
    }
  }
}

LevelPermutation LevelActions::of(const Word& word, int level) const {
  if (level < 0 || level > level_) throw Error(ErrorKind::InvalidArgument, "level outside precomputed range");
  LevelPermutation out = LevelPermutation::identity(spec_.degree(), level);
  for (const Letter& letter : word.letters()) out = out.then(of_letter(letter, level));
  return out;
}

const LevelPermutation& LevelActions::of_letter(Letter letter, int level) const {
  return letters_[level][2 * letter.generator + (letter.inverse ? 1 : 0)];
}

LevelPermutation truncated_action(const GroupSpec& spec, const Word& word, int level) {
  if (level < 1) throw Error(ErrorKind::InvalidArgument, "truncation level must be at least 1");
  return LevelActions(spec, level).of(word);
}

namespace {

std::vector<LevelPermutation> generator_images(const LevelActions& actions) {
  std::vector<LevelPermutation> out;
  for (std::size_t g = 0; g < actions.spec().generators().size(); ++g)
    out.push_back(actions.of_letter(Letter{static_cast<std::uint16_t>(g), false}, actions.level()));
  return out;
}

// Right-multiplication closure of `elements` under `gens`, starting from `queue`.
void close_under(std::unordered_set<LevelPermutation, LevelPermutationHash>& elements,
                 std::deque<LevelPermutation>& queue, const std::vector<LevelPermutation>& gens,
                 std::size_t size_budget) {
  while (!queue.empty()) {
    LevelPermutation current = std::move(queue.front());
    queue.pop_front();
    for (const LevelPermutation& gen : gens) {
      LevelPermutation next = current.then(gen);
      if (elements.contains(next)) continue;
      if (elements.size() >= size_budget)
        throw Error(ErrorKind::SizeBudgetExceeded, "quotient closure exceeded " + std::to_string(size_budget) + " elements");
      elements.insert(next);
      queue.push_back(std::move(next));
    }
  }
}

}  // namespace

std::size_t ambient_order(const GroupSpec& spec, int level, std::size_t size_budget) {
  LevelActions actions(spec, level);
  auto gens = generator_images(actions);
  std::unordered_set<LevelPermutation, LevelPermutationHash> elements{LevelPermutation::identity(spec.degree(), level)};
  std::deque<LevelPermutation> queue{LevelPermutation::identity(spec.degree(), level)};
  close_under(elements, queue, gens, size_budget);
  return elements.size();
}

QuotientTable normal_closure_image(const GroupSpec& spec, const std::vector<Word>& seeds, int level,
                                   std::size_t size_budget) {
  if (level < 1) throw Error(ErrorKind::InvalidArgument, "quotient level must be at least 1");
  LevelActions actions(spec, level);
  QuotientTable table;
  table.level = level;
  table.seeds = seeds;
  table.generator_images = generator_images(actions);
  table.ambient_order = ambient_order(spec, level, size_budget);

  std::vector<LevelPermutation> gens;
  for (const Word& seed : seeds) {
    LevelPermutation image = actions.of(seed);
    if (!image.is_identity()) gens.push_back(std::move(image));
  }

  const LevelPermutation identity = LevelPermutation::identity(spec.degree(), level);
  table.elements.insert(identity);
  std::deque<LevelPermutation> queue{identity};
  close_under(table.elements, queue, gens, size_budget);

  // Add conjugates of the subgroup generators until the subgroup is normal.
  std::vector<LevelPermutation> conjugators;
  for (const LevelPermutation& x : table.generator_images) {
    conjugators.push_back(x);
    conjugators.push_back(x.inverse());
  }
  bool grown = true;
  while (grown) {
    grown = false;
    std::vector<LevelPermutation> added;
    for (const LevelPermutation& gen : gens)
      for (const LevelPermutation& x : conjugators) {
        LevelPermutation conjugate = x.inverse().then(gen).then(x);
        if (!table.elements.contains(conjugate)) added.push_back(std::move(conjugate));
      }
    if (!added.empty()) {
      grown = true;
      gens.insert(gens.end(), added.begin(), added.end());
      for (const LevelPermutation& element : table.elements) queue.push_back(element);
      close_under(table.elements, queue, gens, size_budget);
    }
  }

  table.closed_under_product = true;
  for (const LevelPermutation& gen : gens)
    for (const LevelPermutation& element : table.elements)
      if (!table.elements.contains(element.then(gen))) table.closed_under_product = false;
  table.closed_under_conjugation = true;
  for (const LevelPermutation& gen : gens)
    for (const LevelPermutation& x : conjugators)
      if (!table.elements.contains(x.inverse().then(gen).then(x))) table.closed_under_conjugation = false;
  return table;
}

CosetClassifier::CosetClassifier(const GroupSpec& spec, const QuotientTable& table, std::vector<Word> transversal)
    : actions_(spec, table.level), table_(table), transversal_(std::move(transversal)) {
  for (const Word& t : transversal_) inverse_images_.push_back(actions_.of(t).inverse());
  for (std::size_t i = 0; i < transversal_.size(); ++i)
    for (std::size_t j = i + 1; j < transversal_.size(); ++j)
      if (table_.contains(inverse_images_[i].then(inverse_images_[j].inverse())))
        throw Error(ErrorKind::AmbiguousTransversal, "transversal words " + spec.format(transversal_[i]) + " and " +
                                                         spec.format(transversal_[j]) + " lie in the same coset");
}

std::size_t CosetClassifier::classify(const Word& word) const { return classify(actions_.of(word)); }

std::size_t CosetClassifier::classify(const LevelPermutation& image) const {
  for (std::size_t i = 0; i < inverse_images_.size(); ++i)
    if (table_.contains(inverse_images_[i].then(image))) return i;
  throw Error(ErrorKind::NoCoset, "element lies outside every transversal coset at level " + std::to_string(table_.level));
}

std::size_t coset_of(const GroupSpec& spec, const Word& word, const QuotientTable& table,
                     const std::vector<Word>& transversal) {
  return CosetClassifier(spec, table, transversal).classify(word);
}

std::size_t parity_coset(const Word& word) { return word.size() % 2; }

}  // namespace pgrowth
