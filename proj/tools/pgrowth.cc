#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "pgrowth/asymptotics.h"
#include "pgrowth/automorphism.h"
#include "pgrowth/branch.h"
#include "pgrowth/branch_tables.h"
#include "pgrowth/catalog.h"
#include "pgrowth/census.h"
#include "pgrowth/error.h"
#include "pgrowth/io.h"
#include "pgrowth/portrait.h"
#include "pgrowth/specialized.h"
#include "pgrowth/verify.h"

using namespace pgrowth;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

struct GroupOptions {
  std::string group;
  int p = 0;
  std::string e;
};

enum class Family { Grigorchuk, Ggs, Apollonian, User };

struct ResolvedGroup {
  Family family;
  GroupSpec spec;
  std::optional<GgsVector> vector;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "not an integer list: " + text);
    }
  }
  return out;
}

ResolvedGroup resolve(const GroupOptions& options) {
  if (options.group == "grigorchuk") return {Family::Grigorchuk, grigorchuk(), std::nullopt};
  if (options.group == "apollonian") return {Family::Apollonian, apollonian(), std::nullopt};
  if (options.group == "ggs") {
    if (options.p == 0 || options.e.empty()) throw Error(ErrorKind::InvalidArgument, "ggs needs --p and --e");
    GgsVector vector = GgsVector::make(options.p, parse_int_list(options.e));
    return {Family::Ggs, ggs(vector), vector};
  }
  if (options.group.empty()) throw Error(ErrorKind::InvalidArgument, "--group is required");
  return {Family::User, group_spec_from_json(read_json_file(options.group)), std::nullopt};
}

void add_group_options(CLI::App* command, GroupOptions& options) {
  command->add_option("--group", options.group, "grigorchuk, ggs, apollonian, or a group spec JSON file");
  command->add_option("--p", options.p, "GGS prime");
  command->add_option("--e", options.e, "GGS vector, comma separated");
}

std::optional<BranchData> load_branch(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return branch_data_from_json(read_json_file(path));
}

/// Branch data of a catalog group with a published section transversal.
BranchData catalog_branch_data(const ResolvedGroup& group) {
  BranchSetup setup;
  if (group.family == Family::Grigorchuk)
    setup = grigorchuk_branch_setup();
  else if (group.family == Family::Apollonian)
    setup = apollonian_branch_setup();
  else
    throw Error(ErrorKind::InvalidArgument, "no published section transversal for " + group.spec.name() +
                                                "; pass --branch with user branch data");
  const QuotientTable table = normal_closure_image(group.spec, group.spec.parse_all(setup.seeds), setup.level);
  return build_branch_data(group.spec, group.spec.parse_all(setup.transversal),
                           group.spec.parse_all(setup.section_transversal), table);
}

/// Upper bound on the decimal digits of a_N from a_{n+1} <= B a_n^d.
double projected_digits(double a0, std::size_t bound, std::size_t d, int n) {
  double digits = std::log10(a0);
  for (int i = 0; i < n; ++i) digits = std::log10(static_cast<double>(bound)) + static_cast<double>(d) * digits;
  return digits + 1;
}

GrowthSeries compute_series(const ResolvedGroup& group, const std::string& engine, const std::string& branch_path,
                            int n, double max_megabytes) {
  std::optional<BranchData> user = load_branch(branch_path);
  const std::size_t k = user ? user->k() : 16;
  const double digits = projected_digits(static_cast<double>(group.spec.nucleus().size()),
                                         root_group_order(group.spec), group.spec.degree(), n);
  const double megabytes = digits * static_cast<double>(k + 1) * (n + 1) * 0.415 / 1e6;
  std::cerr << "projected: a_" << n << " has at most " << static_cast<long long>(std::min(digits, 1e18))
            << " digits, about " << megabytes << " MB of integers\n";
  if (megabytes > max_megabytes)
    throw Error(ErrorKind::SizeBudgetExceeded,
                "projected memory exceeds --max-memory (" + std::to_string(max_megabytes) + " MB)");

  if (user) return iterate_growth(*user, n);
  if (group.family == Family::User) throw Error(ErrorKind::InvalidArgument, "user groups need --branch");
  const bool generic = engine == "generic";
  switch (group.family) {
    case Family::Grigorchuk:
      return generic ? iterate_growth(catalog_branch_data(group), n) : grigorchuk_growth(n);
    case Family::Apollonian:
      return generic ? iterate_growth(catalog_branch_data(group), n) : apollonian_growth(n);
    case Family::Ggs:
      if (generic) catalog_branch_data(group);
      return ggs_growth(*group.vector, n);
    case Family::User:
      break;
  }
  throw Error(ErrorKind::InvalidArgument, "unsupported group");
}

void print_series(const GrowthSeries& series, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(series).dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << growth_series_csv(series);
  } else {
    for (int n = 0; n <= series.max_depth(); ++n) std::cout << "a_" << n << " = " << series.totals[n] << '\n';
  }
}

mpfr_prec_t precision_from(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("PGROWTH_PRECISION")) {
    const int bits = std::atoi(env);
    if (bits <= 0) throw Error(ErrorKind::InvalidArgument, "PGROWTH_PRECISION must be a positive integer");
    return bits;
  }
  return 0;
}

mpq_class parse_rational(const std::string& text) {
  mpq_class value;
  if (value.set_str(text, 10) != 0) throw Error(ErrorKind::ParseError, "not a rational number: " + text);
  value.canonicalize();
  return value;
}

void print_checks(const std::string& group, const std::vector<Check>& checks, const std::string& format) {
  if (format == "json") {
    Json list = Json::array();
    for (const Check& c : checks)
      list.push_back({{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}, {"detail", c.detail}});
    std::cout << Json{{"group", group}, {"passed", all_passed(checks)}, {"checks", list}}.dump(2) << '\n';
  } else {
    for (const Check& c : checks)
      std::cout << (c.skipped ? "SKIP " : c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Portrait growth of contracting self-similar groups"};
  app.require_subcommand(1);

  GroupOptions group_options;
  std::string format, engine = "auto", branch_path;
  int n = 3;

  auto* growth = app.add_subcommand("growth", "Portrait growth a_0..a_N");
  add_group_options(growth, group_options);
  double max_megabytes = 2048;
  growth->add_option("--n", n, "Maximum depth")->check(CLI::NonNegativeNumber);
  growth->add_option("--format", format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));
  growth->add_option("--engine", engine, "auto, specialized or generic")
      ->check(CLI::IsMember({"auto", "specialized", "generic"}));
  growth->add_option("--branch", branch_path, "Branch data JSON for the generic engine");
  growth->add_option("--max-memory", max_megabytes, "Refuse runs projected above this many MB");

  auto* gamma = app.add_subcommand("gamma", "Certified doubly exponential growth constant");
  add_group_options(gamma, group_options);
  int precision = 0;
  std::string bound_a, bound_b;
  gamma->add_option("--n", n, "Series length used")->check(CLI::NonNegativeNumber);
  gamma->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  gamma->add_option("--precision", precision, "Working precision in bits (default: PGROWTH_PRECISION or automatic)");
  gamma->add_option("--A", bound_a, "Proven lower ratio bound, e.g. 1/4");
  gamma->add_option("--B", bound_b, "Proven upper ratio bound");
  gamma->add_option("--branch", branch_path, "Branch data JSON for user groups");

  auto* verify = app.add_subcommand("verify", "Run the verification suite for a group");
  add_group_options(verify, group_options);
  VerifyOptions verify_options;
  verify->add_option("--oracle-depth", verify_options.oracle_depth, "Census depth (default per group)");
  verify->add_flag("--table", verify_options.tables_only, "Only check the published decomposition tables");
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--branch", branch_path, "Branch data JSON for user groups");

  auto* portrait = app.add_subcommand("portrait", "Render the portrait of an element");
  add_group_options(portrait, group_options);
  std::string word_text;
  int max_depth = kDefaultMaxDepth;
  portrait->add_option("word", word_text, "Element as a word, e.g. bacac")->required();
  portrait->add_option("--format", format, "text or dot")->check(CLI::IsMember({"text", "dot"}));
  portrait->add_option("--max-depth", max_depth, "Depth budget")->check(CLI::NonNegativeNumber);

  auto* census_cmd = app.add_subcommand("census", "Count elements by portrait depth by enumeration");
  add_group_options(census_cmd, group_options);
  CensusOptions census_options;
  std::string strategy = "oracle";
  std::optional<int> slack;
  bool by_coset = false;
  census_cmd->add_option("--n", census_options.n, "Depth bound")->check(CLI::NonNegativeNumber);
  census_cmd->add_option("--strategy", strategy, "oracle, bfs or closure")
      ->check(CLI::IsMember({"oracle", "bfs", "closure"}));
  census_cmd->add_option("--radius-cap", census_options.radius_cap, "Radius or round cap");
  census_cmd->add_option("--patience", census_options.patience, "Idle radii before stopping (bfs)");
  census_cmd->add_option("--slack", slack, "Keep elements of depth up to n + slack");
  census_cmd->add_option("--step-length", census_options.step_length, "Nucleus word length per edge (bfs)");
  census_cmd->add_option("--budget", census_options.element_budget, "Maximum stored elements");
  census_cmd->add_flag("--cosets", by_coset, "Split counts by the published transversal");
  census_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* branch = app.add_subcommand("branch", "Export machine-built branch data as JSON");
  add_group_options(branch, group_options);

  auto* spec_cmd = app.add_subcommand("spec", "Export a group spec as JSON");
  add_group_options(spec_cmd, group_options);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    const ResolvedGroup group = resolve(group_options);

    if (growth->parsed()) {
      print_series(compute_series(group, engine, branch_path, n, max_megabytes), format.empty() ? "csv" : format);
      return 0;
    }

    if (gamma->parsed()) {
      const GrowthSeries series = compute_series(group, "auto", branch_path, n, 1e9);
      const unsigned d = static_cast<unsigned>(group.spec.degree());
      const mpfr_prec_t bits = precision_from(precision);
      std::optional<GammaCertificate> cert;
      if (!bound_a.empty() || !bound_b.empty()) {
        if (bound_a.empty() || bound_b.empty()) throw Error(ErrorKind::InvalidArgument, "--A and --B go together");
        cert = gamma_certificate(series.totals, d, parse_rational(bound_a), parse_rational(bound_b), bits);
      } else if (group.family == Family::Grigorchuk) {
        cert = gamma_certificate(series.totals, d, mpq_class(1, 4), 2, bits);
      } else if (group.family == Family::Apollonian) {
        cert = gamma_certificate(series.totals, d, 3, 3, bits);
      } else if (series.totals.size() >= 3) {
        cert = certify_double_exponential(series.totals, d, bits);
      } else {
        const RatioEnvelope envelope = ratio_envelope(series.totals, d);
        cert = gamma_certificate(series.totals, d, envelope.a_emp, envelope.b_emp, bits);
        cert->empirical = true;
      }
      const bool wide = mpfr_cmp_d(cert->gamma.width().get(), 0.01) > 0;
      if (format == "json") {
        Json out = to_json(*cert);
        out["group"] = group.spec.name();
        out["low_precision"] = wide;
        std::cout << out.dump(2) << '\n';
      } else if (format == "csv") {
        std::cout << certificate_csv(*cert);
      } else {
        std::cout << "group " << group.spec.name() << ", d = " << d << ", A = " << cert->a << ", B = " << cert->b
                  << (cert->empirical ? " (empirical)" : " (proven)") << '\n'
                  << "M     in [" << cert->m.lo.to_string(20, MPFR_RNDD) << ", " << cert->m.hi.to_string(20, MPFR_RNDU)
                  << "]\n"
                  << "alpha in [" << cert->alpha.lo.to_string(20, MPFR_RNDD) << ", "
                  << cert->alpha.hi.to_string(20, MPFR_RNDU) << "]\n"
                  << "beta  in [" << cert->beta.lo.to_string(20, MPFR_RNDD) << ", "
                  << cert->beta.hi.to_string(20, MPFR_RNDU) << "]\n"
                  << "gamma in [" << cert->gamma.lo.to_string(20, MPFR_RNDD) << ", "
                  << cert->gamma.hi.to_string(20, MPFR_RNDU) << "], width " << cert->gamma.width().to_string(6, MPFR_RNDU)
                  << '\n'
                  << "envelopes " << (cert->all_envelopes_verified() ? "verified" : "NOT verified") << " for n <= "
                  << series.max_depth() << '\n';
        if (wide) std::cout << "note: low-precision enclosure; use a larger --n\n";
      }
      return cert->all_envelopes_verified() ? 0 : kExitCheckFailed;
    }

    if (verify->parsed()) {
      std::vector<Check> checks;
      switch (group.family) {
        case Family::Grigorchuk:
          checks = verify_grigorchuk(verify_options);
          break;
        case Family::Ggs:
          checks = verify_ggs(*group.vector, verify_options);
          break;
        case Family::Apollonian:
          checks = verify_apollonian(verify_options);
          break;
        case Family::User:
          checks = verify_user(group.spec, load_branch(branch_path), verify_options);
          break;
      }
      print_checks(group.spec.name(), checks, format.empty() ? "json" : format);
      return all_passed(checks) ? 0 : kExitCheckFailed;
    }

    if (portrait->parsed()) {
      const Portrait result = build_portrait(group.spec, group.spec.parse(word_text), max_depth);
      std::cout << (format == "dot" ? render_dot(group.spec, result) : render_ascii(group.spec, result));
      return 0;
    }

    if (census_cmd->parsed()) {
      std::optional<QuotientTable> table;
      std::optional<CosetClassifier> classifier;
      std::vector<std::string> labels;
      if (by_coset) {
        BranchSetup setup;
        if (group.family == Family::Grigorchuk)
          setup = grigorchuk_branch_setup();
        else if (group.family == Family::Apollonian)
          setup = apollonian_branch_setup();
        else if (group.family == Family::Ggs)
          setup = ggs_branch_setup(group.vector->p);
        else
          throw Error(ErrorKind::InvalidArgument, "--cosets needs a catalog group");
        table = normal_closure_image(group.spec, group.spec.parse_all(setup.seeds), setup.level);
        classifier.emplace(group.spec, *table, group.spec.parse_all(setup.transversal));
        labels = setup.transversal;
      }
      const CosetClassifier* classify = classifier ? &*classifier : nullptr;
      DepthCensus result;
      if (strategy == "oracle") {
        result = oracle_census(group.spec, census_options.n, classify, census_options.element_budget).census;
      } else {
        census_options.strategy = strategy == "bfs" ? CensusStrategy::BreadthFirst : CensusStrategy::ProductClosure;
        census_options.expand_slack = slack;
        result = census(group.spec, census_options, classify);
      }
      if (format == "json")
        std::cout << to_json(result, labels).dump(2) << '\n';
      else
        std::cout << census_csv(result, labels);
      return 0;
    }

    if (branch->parsed()) {
      std::cout << to_json(catalog_branch_data(group)).dump(2) << '\n';
      return 0;
    }

    if (spec_cmd->parsed()) {
      std::cout << to_json(group.spec).dump(2) << '\n';
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
