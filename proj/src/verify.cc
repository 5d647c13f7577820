#include "pgrowth/verify.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pgrowth/asymptotics.h"
#include "pgrowth/automorphism.h"
#include "pgrowth/branch_tables.h"
#include "pgrowth/census.h"
#include "pgrowth/error.h"
#include "pgrowth/specialized.h"

namespace pgrowth {

namespace {

std::string join(const std::vector<mpz_class>& values, std::size_t count) {
  std::string out;
  for (std::size_t i = 0; i < std::min(count, values.size()); ++i) {
    if (i) out += ',';
    out += values[i].get_str();
  }
  return out;
}

Check nucleus_check(const GroupSpec& spec) {
  const NucleusReport report = validate_contraction(spec, 3);
  std::string detail = std::to_string(report.witnesses.size()) + " pairs, max level " +
                       std::to_string(report.max_level_used);
  if (!report.failures.empty()) detail += "; " + report.failures.front();
  return {"nucleus closed and contracting", report.ok(), detail};
}

Check index_check(const GroupSpec& spec, const BranchSetup& setup, int level) {
  const std::string name = "branching subgroup index at level " + std::to_string(level);
  try {
    const QuotientTable table = normal_closure_image(spec, spec.parse_all(setup.seeds), level);
    return {name, table.ambient_index() == setup.expected_index,
            std::to_string(table.ambient_index()) + " (expected " + std::to_string(setup.expected_index) + ")"};
  } catch (const Error& e) {
    return {name, false, e.what()};
  }
}

Check series_equal_check(const std::string& name, const GrowthSeries& lhs, const GrowthSeries& rhs) {
  const bool same = lhs.totals == rhs.totals && lhs.per_coset == rhs.per_coset;
  return {name, same, "n <= " + std::to_string(std::min(lhs.max_depth(), rhs.max_depth()))};
}

/// Census totals (and per-coset counts when both sides have them) against a series.
Check census_check(const DepthCensus& census, int slack, const GrowthSeries& series) {
  const std::size_t terms = census.totals.size();
  bool ok = series.totals.size() >= terms &&
            std::equal(census.totals.begin(), census.totals.end(), series.totals.begin());
  if (ok && census.per_coset && census.per_coset->size() == series.per_coset.size())
    for (std::size_t i = 0; i < series.per_coset.size(); ++i)
      ok = ok && std::equal((*census.per_coset)[i].begin(), (*census.per_coset)[i].end(), series.per_coset[i].begin());
  std::ostringstream detail;
  detail << "census " << join(census.totals, terms) << " vs recursion " << join(series.totals, terms) << "; slack "
         << slack << ", " << census.elements_visited << " elements, "
         << (census.saturated ? "saturated" : "not saturated");
  return {"census agrees to depth " + std::to_string(census.n), ok, detail.str()};
}

Check gamma_check(const std::string& name, const GammaCertificate& cert, double expected, double tolerance) {
  BigFloat lo(cert.precision_bits), hi(cert.precision_bits);
  mpfr_set_d(lo.get(), expected - tolerance, MPFR_RNDD);
  mpfr_set_d(hi.get(), expected + tolerance, MPFR_RNDU);
  const bool near = mpfr_lessequal_p(cert.gamma.lo.get(), hi.get()) && mpfr_lessequal_p(lo.get(), cert.gamma.hi.get());
  return {name, near && cert.all_envelopes_verified(),
          "gamma in [" + cert.gamma.lo.to_string(8, MPFR_RNDD) + ", " + cert.gamma.hi.to_string(8, MPFR_RNDU) +
              "], envelopes " + (cert.all_envelopes_verified() ? "verified" : "NOT verified")};
}

Check guarded(const std::string& name, auto&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, false, e.what()};
  }
}

std::size_t find_index(const std::vector<std::string>& values, const std::string& value) {
  return static_cast<std::size_t>(std::find(values.begin(), values.end(), value) - values.begin());
}

}  // namespace

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed || c.skipped; });
}

Check stabilizer_bound_check(const GrowthSeries& series, std::size_t bound, unsigned d) {
  for (std::size_t n = 0; n + 1 < series.totals.size(); ++n) {
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), series.totals[n].get_mpz_t(), d);
    if (series.totals[n + 1] > static_cast<unsigned long>(bound) * power)
      return {"a_{n+1} <= |G:st(1)| a_n^d", false, "fails at n = " + std::to_string(n)};
  }
  return {"a_{n+1} <= |G:st(1)| a_n^d", true,
          "bound " + std::to_string(bound) + ", n < " + std::to_string(series.max_depth())};
}

std::vector<Check> verify_grigorchuk(const VerifyOptions& options) {
  const GroupSpec spec = grigorchuk();
  const BranchSetup setup = grigorchuk_branch_setup();
  std::vector<Check> checks;
  if (!options.tables_only) {
    checks.push_back(nucleus_check(spec));
    checks.push_back(index_check(spec, setup, 3));
    checks.push_back(index_check(spec, setup, 4));
  }

  const QuotientTable table = normal_closure_image(spec, spec.parse_all(setup.seeds), setup.level);
  const CosetClassifier classifier(spec, table, spec.parse_all(setup.transversal));
  const BranchData data = build_branch_data(spec, spec.parse_all(setup.transversal),
                                            spec.parse_all(setup.section_transversal), table);

  {
    WordProblem problem(spec);
    const auto rows = grigorchuk_decompositions();
    std::size_t agree = 0, literal = 0;
    std::string first_failure;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto& row = rows[r];
      const Word word = spec.parse(row.word);
      const auto actual = sections(spec, word);
      const BranchEntry& entry = data.table[find_index(setup.transversal, row.coset)][r % 4];
      bool ok = root_permutation(spec, word) == Permutation::from_cycles(2, row.perm) &&
                classifier.classify(word) == classifier.classify(spec.parse(row.coset)) &&
                entry.perm == Permutation::from_cycles(2, row.perm);
      bool same = true;
      for (std::size_t u = 0; u < 2; ++u) {
        const Word stated = spec.parse(row.sections[u]);
        ok = ok && classifier.classify(actual[u]) == classifier.classify(stated) &&
             entry.cosets[u] == classifier.classify(stated);
        same = same && problem.are_equal(actual[u], stated);
      }
      agree += ok;
      literal += same;
      if (!ok && first_failure.empty()) first_failure = "; first failure: " + row.word;
    }
    checks.push_back({"published decompositions agree modulo K", agree == rows.size(),
                      std::to_string(agree) + "/" + std::to_string(rows.size()) + " rows, " + std::to_string(literal) +
                          " also literally equal" + first_failure});
    const std::vector<std::uint64_t> expected_p0{1, 1, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0};
    checks.push_back({"initial counts p_0", data.p0 == expected_p0, "nucleus {1,a,b,c,d} in cosets 1,a,b,c,d"});
  }
  if (options.tables_only) return checks;

  const GrowthSeries generic = iterate_growth(data, options.series_depth);
  const GrowthSeries specialized = grigorchuk_growth(std::max(options.series_depth, options.identity_depth + 1));
  {
    GrowthSeries prefix = specialized;
    prefix.totals.resize(generic.totals.size());
    for (auto& row : prefix.per_coset) row.resize(generic.totals.size());
    checks.push_back(series_equal_check("generic recursion equals six-variable recursion", generic, prefix));
  }
  {
    const auto states = grigorchuk_states(options.identity_depth);
    bool ok = true;
    for (int n = 1; n <= options.identity_depth; ++n) {
      const auto& s = states[n - 1];
      const mpz_class root = s.x - s.z + s.X - s.Z;
      ok = ok && 4 * specialized.totals[n + 1] - specialized.totals[n] * specialized.totals[n] == 4 * root * root;
    }
    checks.push_back({"a_{n+1} - a_n^2/4 = (x_n - z_n + X_n - Z_n)^2", ok,
                      "1 <= n <= " + std::to_string(options.identity_depth)});
  }
  checks.push_back(stabilizer_bound_check(specialized, root_group_order(spec), 2));

  const int depth = options.oracle_depth < 0 ? 2 : options.oracle_depth;
  checks.push_back(guarded("census", [&]() -> Check {
    const OracleCensus oracle = oracle_census(spec, depth, &classifier);
    Check check = census_check(oracle.census, oracle.slack, generic);
    if (!check.passed || depth < 1) return check;
    const Word a = spec.parse("a");
    std::size_t compared = 0;
    bool symmetric = true;
    for (std::size_t i = 0; i < setup.transversal.size(); ++i) {
      const Word t = spec.parse(setup.transversal[i]);
      for (const Word& moved : {a * t, t * a, a * t * a})
        for (int n = 1; n <= depth; ++n) {
          symmetric = symmetric && (*oracle.census.per_coset)[i][n] == (*oracle.census.per_coset)[classifier.classify(moved)][n];
          ++compared;
        }
    }
    check.detail += "; rooted symmetries p_n(t)=p_n(at)=p_n(ta)=p_n(t^a) " +
                    std::string(symmetric ? "hold" : "FAIL") + " (" + std::to_string(compared) + " comparisons)";
    check.passed = symmetric;
    return check;
  }));

  checks.push_back(guarded("gamma with A=1/4, B=2", [&] {
    const std::vector<mpz_class> prefix(specialized.totals.begin(), specialized.totals.begin() + 11);
    const GammaCertificate cert = gamma_certificate(prefix, 2, mpq_class(1, 4), 2);
    Check check = gamma_check("gamma with A=1/4, B=2 near 0.71", cert, 0.71, 0.01);
    check.passed = check.passed && std::abs(cert.m.lo.to_double() - std::log(4.0)) < 1e-12 &&
                   mpfr_cmp_d(cert.terms.back().enclosure.width().get(), 2 * std::log(4.0) / 1024 + 1e-12) <= 0;
    return check;
  }));
  return checks;
}

std::vector<Check> verify_ggs(const GgsVector& vector, const VerifyOptions& options) {
  if (is_symmetric(vector))
    throw Error(ErrorKind::NonSymmetricRequired, "GGS vector " + vector.to_string() + " is symmetric; refusing");
  const int p = vector.p;
  const GroupSpec spec = ggs(vector);
  const BranchSetup setup = ggs_branch_setup(p);
  std::vector<Check> checks;
  checks.push_back(nucleus_check(spec));
  // G / st_G(2) can have order p^(p+1).
  mpz_class level_two_order;
  mpz_ui_pow_ui(level_two_order.get_mpz_t(), p, p + 1);
  if (level_two_order <= static_cast<unsigned long>(kDefaultQuotientBudget))
    checks.push_back(index_check(spec, setup, 2));
  else
    checks.push_back({"branching subgroup index at level 2", false,
                      "skipped: the level-2 quotient may have " + level_two_order.get_str() +
                          " elements, above the closure budget",
                      true});
  if (options.tables_only) return checks;
  if (p == 3) checks.push_back(index_check(spec, setup, 3));

  const GgsParameters params = ggs_parameters(vector);
  mpz_class limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), p, p - 1);
  checks.push_back({"solution counts x1, y1", params.x1 >= 1 && params.x1 <= limit && params.y1 <= limit,
                    "x1 = " + params.x1.get_str() + ", y1 = " + params.y1.get_str()});

  const int depth = std::min(options.series_depth, 4);
  GrowthSeries series;
  checks.push_back(guarded("closed form", [&] {
    series = ggs_growth(vector, depth);
    return Check{"closed form equals x/y recursion, exact divisions", true, "n <= " + std::to_string(depth)};
  }));
  checks.push_back(guarded("coset recursion", [&] {
    const int oracle = p <= 5 ? std::min(depth, 3) : std::min(depth, 2);
    const GrowthSeries full = ggs_coset_recursion(vector, oracle);
    bool same = true;
    for (std::size_t i = 0; i < full.per_coset.size(); ++i)
      same = same && std::equal(full.per_coset[i].begin(), full.per_coset[i].end(), series.per_coset[i].begin());
    return Check{"p^2-coset recursion agrees", same, "n <= " + std::to_string(oracle)};
  }));
  checks.push_back(guarded("z counts", [&] {
    for (int l = 0; l <= std::max(p, 6); ++l) z_counts(p, l);
    return Check{"z_l, z'_l closed forms match enumeration", true, "l <= 6 enumerated"};
  }));
  if (!series.totals.empty()) checks.push_back(stabilizer_bound_check(series, root_group_order(spec), p));

  const int census_depth = options.oracle_depth < 0 ? 1 : options.oracle_depth;
  checks.push_back(guarded("census", [&] {
    const OracleCensus oracle = oracle_census(spec, census_depth);
    return census_check(oracle.census, oracle.slack, series);
  }));
  return checks;
}

std::vector<Check> verify_apollonian(const VerifyOptions& options) {
  const GroupSpec spec = apollonian();
  const BranchSetup setup = apollonian_branch_setup();
  std::vector<Check> checks;
  if (!options.tables_only) {
    checks.push_back(nucleus_check(spec));
    checks.push_back(index_check(spec, setup, 1));
    checks.push_back(index_check(spec, setup, 2));
  }

  const QuotientTable table = normal_closure_image(spec, spec.parse_all(setup.seeds), setup.level);
  const BranchData data = build_branch_data(spec, spec.parse_all(setup.transversal),
                                            spec.parse_all(setup.section_transversal), table);
  {
    WordProblem problem(spec);
    const auto rows = apollonian_decompositions();
    std::size_t confirmed = 0;
    std::string first_failure;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto& row = rows[r];
      const Word word = spec.parse(row.word);
      const Permutation perm = Permutation::from_cycles(3, row.perm);
      const auto actual = sections(spec, word);
      const BranchEntry& entry = data.table[find_index(setup.transversal, row.coset)][r % 12];
      bool ok = root_permutation(spec, word) == perm && entry.perm == perm &&
                parity_coset(word) == find_index(setup.transversal, row.coset);
      for (std::size_t u = 0; u < 3; ++u) {
        const Word stated = spec.parse(row.sections[u]);
        ok = ok && problem.are_equal(actual[u], stated) && entry.cosets[u] == parity_coset(stated);
      }
      confirmed += ok;
      if (!ok && first_failure.empty()) first_failure = "; first failure: " + row.word;
    }
    checks.push_back({"published decomposition table", confirmed == rows.size(),
                      std::to_string(confirmed) + "/" + std::to_string(rows.size()) +
                          " rows equal as automorphisms with parity cosets" + first_failure});
    checks.push_back({"initial counts p_0", data.p0 == std::vector<std::uint64_t>{1, 6}, "X_0 = 1, Y_0 = 6"});
  }
  if (options.tables_only) return checks;

  const int depth = std::min(options.series_depth, 8);
  const GrowthSeries closed = apollonian_growth(depth);
  checks.push_back(series_equal_check("generic recursion equals X/Y recursion and closed form",
                                      iterate_growth(data, depth), closed));
  {
    bool ok = true;
    for (int n = 0; n < depth; ++n) {
      const mpz_class& a = closed.totals[n];
      ok = ok && closed.totals[n + 1] == 3 * a * a * a;
    }
    checks.push_back({"a_{n+1} = 3 a_n^3", ok, "n < " + std::to_string(depth)});
  }
  checks.push_back(stabilizer_bound_check(closed, root_group_order(spec), 3));

  const int census_depth = options.oracle_depth < 0 ? 1 : options.oracle_depth;
  checks.push_back(guarded("census", [&] {
    const OracleCensus oracle = oracle_census(spec, census_depth);
    return census_check(oracle.census, oracle.slack, closed);
  }));
  checks.push_back(guarded("gamma with A=B=3", [&] {
    const std::vector<mpz_class> prefix(closed.totals.begin(), closed.totals.begin() + std::min(depth, 5) + 1);
    const GammaCertificate cert = gamma_certificate(prefix, 3, 3, 3);
    return gamma_check("gamma with A=B=3 contains ln(7 sqrt 3)", cert, std::log(7.0 * std::sqrt(3.0)), 1e-9);
  }));
  return checks;
}

std::vector<Check> verify_user(const GroupSpec& spec, const std::optional<BranchData>& data,
                               const VerifyOptions& options) {
  std::vector<Check> checks{nucleus_check(spec)};
  if (!data || options.tables_only) return checks;
  const GrowthSeries series = iterate_growth(*data, options.series_depth);
  checks.push_back({"per-coset counts sum to totals", series.sums_consistent(), ""});
  checks.push_back({"p_0 sums to the nucleus size", series.totals[0] == static_cast<unsigned long>(spec.nucleus().size()),
                    "a_0 = " + series.totals[0].get_str()});
  checks.push_back(stabilizer_bound_check(series, root_group_order(spec), static_cast<unsigned>(spec.degree())));
  const int census_depth = options.oracle_depth < 0 ? 1 : options.oracle_depth;
  checks.push_back(guarded("census", [&] {
    const OracleCensus oracle = oracle_census(spec, census_depth);
    return census_check(oracle.census, oracle.slack, series);
  }));
  return checks;
}

}  // namespace pgrowth
