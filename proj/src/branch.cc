#include "pgrowth/branch.h"

#include "pgrowth/automorphism.h"
#include "pgrowth/error.h"

namespace pgrowth {

namespace {

std::size_t power(std::size_t base, int exponent) {
  std::size_t out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

/// Action of the section at level-1 vertex u, one level shallower.
LevelPermutation section_image(const LevelPermutation& perm, std::uint32_t u) {
  const std::size_t d = perm.degree();
  const std::size_t block = power(d, perm.level() - 1);
  const std::uint32_t target = perm(static_cast<std::uint32_t>(u * block)) / static_cast<std::uint32_t>(block);
  std::vector<std::uint32_t> images(block);
  for (std::size_t v = 0; v < block; ++v)
    images[v] = perm(static_cast<std::uint32_t>(u * block + v)) - static_cast<std::uint32_t>(target * block);
  return LevelPermutation(d, perm.level() - 1, std::move(images));
}

/// Whether an element given at level m+1 lies in psi^-1(K x ... x K).
bool in_section_subgroup(const LevelPermutation& perm, const QuotientTable& table) {
  if (!perm.project(1).is_identity()) return false;
  for (std::uint32_t u = 0; u < perm.degree(); ++u)
    if (!table.contains(section_image(perm, u))) return false;
  return true;
}

}  // namespace

void BranchData::validate() const {
  if (degree < 2) throw Error(ErrorKind::InvalidSpec, "branch data degree must be at least 2");
  if (transversal.empty()) throw Error(ErrorKind::InvalidSpec, "branch data needs a nonempty transversal");
  if (table.size() != k()) throw Error(ErrorKind::InvalidSpec, "branch table needs one row per transversal element");
  if (p0.size() != k()) throw Error(ErrorKind::InvalidSpec, "p0 needs one entry per transversal element");
  for (const auto& row : table) {
    if (row.size() != l()) throw Error(ErrorKind::InvalidSpec, "branch table row has the wrong length");
    for (const auto& entry : row) {
      if (entry.cosets.size() != degree || entry.perm.degree() != degree)
        throw Error(ErrorKind::InvalidSpec, "branch table entry has the wrong degree");
      for (std::size_t coset : entry.cosets)
        if (coset >= k()) throw Error(ErrorKind::InvalidSpec, "branch table coset index out of range");
    }
  }
}

std::size_t section_subgroup_index(const GroupSpec& spec, const QuotientTable& table, std::size_t size_budget) {
  QuotientTable deeper = normal_closure_image(spec, table.seeds, table.level + 1, size_budget);
  std::size_t inside = 0;
  for (const auto& element : deeper.elements)
    if (in_section_subgroup(element, table)) ++inside;
  return deeper.size() / inside;
}

BranchData build_branch_data(const GroupSpec& spec, const std::vector<Word>& transversal,
                             const std::vector<Word>& section_transversal, const QuotientTable& table) {
  const std::size_t d = spec.degree();
  if (transversal.size() != table.ambient_index())
    throw Error(ErrorKind::InvalidArgument, "transversal has " + std::to_string(transversal.size()) +
                                                " elements but the subgroup has index " +
                                                std::to_string(table.ambient_index()));
  CosetClassifier classifier(spec, table, transversal);

  const std::size_t expected = section_subgroup_index(spec, table);
  if (section_transversal.size() != expected)
    throw Error(ErrorKind::InvalidArgument, "section transversal has " + std::to_string(section_transversal.size()) +
                                                " elements but the index is " + std::to_string(expected));
  LevelActions deeper(spec, table.level + 1);
  std::vector<LevelPermutation> inverse_images;
  for (const Word& s : section_transversal) {
    if (!table.contains(classifier.actions().of(s)))
      throw Error(ErrorKind::InvalidArgument, "section transversal element " + spec.format(s) + " is not in K");
    inverse_images.push_back(deeper.of(s).inverse());
  }
  for (std::size_t i = 0; i < section_transversal.size(); ++i)
    for (std::size_t j = i + 1; j < section_transversal.size(); ++j)
      if (in_section_subgroup(inverse_images[i].then(inverse_images[j].inverse()), table))
        throw Error(ErrorKind::AmbiguousTransversal, "section transversal elements " +
                                                         spec.format(section_transversal[i]) + " and " +
                                                         spec.format(section_transversal[j]) + " share a coset");

  BranchData data;
  data.group = spec.name();
  data.degree = d;
  for (const Word& t : transversal) data.transversal.push_back(spec.format(t));
  for (const Word& s : section_transversal) data.section_transversal.push_back(spec.format(s));
  for (const Word& t : transversal) {
    std::vector<BranchEntry> row;
    for (const Word& s : section_transversal) {
      const Word product = t * s;
      BranchEntry entry{{}, root_permutation(spec, product)};
      for (const Word& section : sections(spec, product)) entry.cosets.push_back(classifier.classify(section));
      row.push_back(std::move(entry));
    }
    data.table.push_back(std::move(row));
  }
  data.p0.assign(transversal.size(), 0);
  for (const Word& nu : spec.nucleus()) ++data.p0[classifier.classify(nu)];
  return data;
}

GrowthSeries iterate_growth(const BranchData& data, int max_depth) {
  if (max_depth < 0) throw Error(ErrorKind::InvalidArgument, "depth must be nonnegative");
  data.validate();
  GrowthSeries series;
  series.group = data.group;
  series.provenance = Provenance::Generic;
  series.coset_labels = data.transversal;
  series.per_coset.assign(data.k(), {});

  std::vector<mpz_class> current;
  for (auto value : data.p0) current.emplace_back(static_cast<unsigned long>(value));
  for (int n = 0;; ++n) {
    mpz_class total = 0;
    for (std::size_t i = 0; i < data.k(); ++i) {
      series.per_coset[i].push_back(current[i]);
      total += current[i];
    }
    series.totals.push_back(total);
    if (n == max_depth) break;

    std::vector<mpz_class> next(data.k());
    for (std::size_t i = 0; i < data.k(); ++i)
      for (const BranchEntry& entry : data.table[i]) {
        mpz_class product = 1;
        for (std::size_t coset : entry.cosets) product *= current[coset];
        next[i] += product;
      }
    current = std::move(next);
  }
  return series;
}

}  // namespace pgrowth
