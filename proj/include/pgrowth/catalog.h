#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgrowth/group_spec.h"

namespace pgrowth {

/// Defining vector of a GGS-group over F_p. Exponents are stored as residues
/// in {0, ..., p-1}.
struct GgsVector {
  int p = 3;
  std::vector<int> e;

  /// Validates p (an odd prime) and reduces e modulo p.
  /// Throws BadPrime, ZeroVector or InvalidArgument.
  static GgsVector make(int p, const std::vector<int>& e);
  std::string to_string() const;
};

/// e_i == e_{p-i} for all i.
bool is_symmetric(const GgsVector& vector);
bool is_prime(int n);

GroupSpec grigorchuk();
GroupSpec ggs(const GgsVector& vector);
GroupSpec apollonian();

struct ContractionWitness {
  std::size_t left = 0;
  std::size_t right = 0;
  /// Least level at which every section of left*right is nuclear.
  std::optional<int> level;
};

struct NucleusReport {
  bool closed_under_sections = true;
  bool pairwise_distinct = true;
  std::vector<ContractionWitness> witnesses;
  int max_level_used = 0;
  std::vector<std::string> failures;

  bool ok() const { return closed_under_sections && pairwise_distinct && failures.empty(); }
};

/// Checks the declared nucleus: closure under first-level sections, pairwise
/// distinctness, and for every ordered pair of nucleus elements the least
/// level <= max_level at which all sections of the product are nuclear.
/// Failures are reported as data.
NucleusReport validate_contraction(const GroupSpec& spec, int max_level);

}  // namespace pgrowth
