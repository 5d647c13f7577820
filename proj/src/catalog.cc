#include "pgrowth/catalog.h"

#include "pgrowth/automorphism.h"
#include "pgrowth/error.h"

namespace pgrowth {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

GgsVector GgsVector::make(int p, const std::vector<int>& e) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorKind::BadPrime, std::to_string(p) + " is not an odd prime");
  if (e.size() != static_cast<std::size_t>(p - 1))
    throw Error(ErrorKind::InvalidArgument, "GGS vector needs p-1 = " + std::to_string(p - 1) + " entries");
  GgsVector out{p, {}};
  bool nonzero = false;
  for (int value : e) {
    int residue = ((value % p) + p) % p;
    nonzero = nonzero || residue != 0;
    out.e.push_back(residue);
  }
  if (!nonzero) throw Error(ErrorKind::ZeroVector, "GGS vector must not be zero");
  return out;
}

std::string GgsVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e[i]);
  }
  return out;
}

bool is_symmetric(const GgsVector& vector) {
  const int p = vector.p;
  for (int i = 1; i <= p - 1; ++i)
    if (vector.e[i - 1] != vector.e[p - i - 1]) return false;
  return true;
}

GroupSpec grigorchuk() {
  return GroupSpec::from_text("grigorchuk", 2,
                              {{"a", {2, 1}, {"1", "1"}},
                               {"b", {1, 2}, {"a", "c"}},
                               {"c", {1, 2}, {"a", "d"}},
                               {"d", {1, 2}, {"1", "b"}}},
                              {"1", "a", "b", "c", "d"});
}

GroupSpec ggs(const GgsVector& vector) {
  const int p = vector.p;
  std::vector<int> cycle(p), fixed(p);
  for (int i = 0; i < p; ++i) {
    cycle[i] = (i + 1) % p + 1;
    fixed[i] = i + 1;
  }

  auto power = [](const std::string& symbol, int k) { return k == 0 ? std::string("1") : symbol + "^" + std::to_string(k); };
  std::vector<std::string> b_sections{"b"};
  for (int ei : vector.e) b_sections.push_back(power("a", ei));

  std::vector<std::string> nucleus{"1"};
  for (int k = 1; k < p; ++k) nucleus.push_back(power("a", k));
  for (int k = 1; k < p; ++k) nucleus.push_back(power("b", k));

  return GroupSpec::from_text("ggs-p" + std::to_string(p) + "-e" + vector.to_string(), static_cast<std::size_t>(p),
                              {{"a", cycle, std::vector<std::string>(p, "1")},
                               {"b", fixed, b_sections}},
                              nucleus);
}

GroupSpec apollonian() {
  return GroupSpec::from_text("apollonian", 3,
                              {{"x", {2, 1, 3}, {"1", "y", "1"}},
                               {"y", {3, 2, 1}, {"x", "1", "1"}},
                               {"z", {1, 3, 2}, {"1", "1", "z"}}},
                              {"1", "x", "y", "z", "x^-1", "y^-1", "z^-1"});
}

NucleusReport validate_contraction(const GroupSpec& spec, int max_level) {
  if (max_level < 1) throw Error(ErrorKind::InvalidArgument, "max_level must be at least 1");
  WordProblem problem(spec);
  NucleusReport report;
  const auto& nucleus = spec.nucleus();

  for (std::size_t i = 0; i < nucleus.size(); ++i)
    for (std::size_t j = i + 1; j < nucleus.size(); ++j)
      if (problem.are_equal(nucleus[i], nucleus[j])) {
        report.pairwise_distinct = false;
        report.failures.push_back("nucleus elements " + spec.format(nucleus[i]) + " and " + spec.format(nucleus[j]) +
                                  " are equal");
      }

  for (const Word& nu : nucleus) {
    auto first_level = sections(spec, nu);
    for (std::size_t u = 0; u < first_level.size(); ++u)
      if (!problem.nucleus_index(first_level[u])) {
        report.closed_under_sections = false;
        report.failures.push_back("section of " + spec.format(nu) + " at vertex " + std::to_string(u + 1) + " (" +
                                  spec.format(first_level[u]) + ") is not nuclear");
      }
  }

  for (std::size_t i = 0; i < nucleus.size(); ++i) {
    for (std::size_t j = 0; j < nucleus.size(); ++j) {
      ContractionWitness witness{i, j, std::nullopt};
      std::vector<Word> level_words{nucleus[i] * nucleus[j]};
      for (int level = 0; level <= max_level; ++level) {
        report.max_level_used = std::max(report.max_level_used, level);
        bool all_nuclear = true;
        for (const Word& w : level_words)
          if (!problem.nucleus_index(w)) {
            all_nuclear = false;
            break;
          }
        if (all_nuclear) {
          witness.level = level;
          break;
        }
        if (level == max_level) break;
        std::vector<Word> next;
        next.reserve(level_words.size() * spec.degree());
        for (const Word& w : level_words)
          for (Word& s : sections(spec, w)) next.push_back(s.freely_reduced());
        level_words = std::move(next);
      }
      if (!witness.level)
        report.failures.push_back("product " + spec.format(nucleus[i] * nucleus[j]) + " not nuclear by level " +
                                  std::to_string(max_level));
      report.witnesses.push_back(witness);
    }
  }
  return report;
}

}  // namespace pgrowth
