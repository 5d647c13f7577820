#include "pgrowth/specialized.h"

#include <stdexcept>

#include "pgrowth/branch_tables.h"
#include "pgrowth/error.h"

namespace pgrowth {

namespace {

void require_depth(int max_depth) {
  if (max_depth < 0) throw Error(ErrorKind::InvalidArgument, "depth must be nonnegative");
}

void require_nonsymmetric(const GgsVector& vector) {
  if (is_symmetric(vector))
    throw Error(ErrorKind::NonSymmetricRequired, "GGS vector " + vector.to_string() + " is symmetric");
}

mpz_class pow(const mpz_class& base, unsigned long exponent) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

mpz_class exact_quotient(const mpz_class& numerator, unsigned long divisor) {
  if (!mpz_divisible_ui_p(numerator.get_mpz_t(), divisor))
    throw Error(ErrorKind::ExactDivisionFailure, "division by " + std::to_string(divisor) + " is not exact");
  mpz_class out;
  mpz_divexact_ui(out.get_mpz_t(), numerator.get_mpz_t(), divisor);
  return out;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

GrowthSeries empty_series(std::string group, Provenance provenance, std::vector<std::string> labels) {
  GrowthSeries series;
  series.group = std::move(group);
  series.provenance = provenance;
  series.per_coset.assign(labels.size(), {});
  series.coset_labels = std::move(labels);
  return series;
}

void append_column(GrowthSeries& series, const std::vector<mpz_class>& column) {
  mpz_class total = 0;
  for (std::size_t i = 0; i < column.size(); ++i) {
    series.per_coset[i].push_back(column[i]);
    total += column[i];
  }
  series.totals.push_back(total);
}

/// Calls visit(tuple) for every tuple in {lo..hi}^length.
template <typename Visit>
void for_each_tuple(int length, int lo, int hi, Visit&& visit) {
  std::vector<int> tuple(static_cast<std::size_t>(length), lo);
  while (true) {
    visit(tuple);
    int r = length - 1;
    while (r >= 0 && tuple[r] == hi) tuple[r--] = lo;
    if (r < 0) return;
    ++tuple[r];
  }
}

std::vector<std::string> ggs_labels(int p) { return ggs_branch_setup(p).transversal; }

/// (n C)_c = sum_r n_r C[r][c] mod p.
std::vector<int> times_circulant(const std::vector<int>& n, const std::vector<std::vector<int>>& c, int p) {
  std::vector<int> out(n.size(), 0);
  for (std::size_t col = 0; col < n.size(); ++col) {
    int sum = 0;
    for (std::size_t row = 0; row < n.size(); ++row) sum += n[row] * c[row][col];
    out[col] = sum % p;
  }
  return out;
}

}  // namespace

GrigorchukState GrigorchukState::next() const {
  return {x * x + 2 * y * y + z * z, x * Y + Y * z + X * y + y * Z, X * X + 2 * Y * Y + Z * Z,
          2 * x * y + 2 * y * z,     x * X + 2 * y * Y + z * Z,     2 * X * Y + 2 * Y * Z};
}

std::vector<GrigorchukState> grigorchuk_states(int max_depth) {
  require_depth(max_depth);
  std::vector<GrigorchukState> states;
  if (max_depth < 1) return states;
  states.push_back({1, 1, 1, 2, 1, 0});
  while (static_cast<int>(states.size()) < max_depth) states.push_back(states.back().next());
  return states;
}

GrowthSeries grigorchuk_growth(int max_depth) {
  require_depth(max_depth);
  const BranchSetup setup = grigorchuk_branch_setup();
  GrowthSeries series = empty_series("grigorchuk", Provenance::Specialized, setup.transversal);

  // Coset classes in transversal order: x y z X Y Z as 0..5.
  static constexpr int kClass[16] = {0, 4, 4, 2, 0, 4, 4, 2, 3, 1, 1, 5, 3, 1, 1, 5};
  static constexpr int kInitial[16] = {1, 1, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0};
  std::vector<mpz_class> column(16);
  for (int i = 0; i < 16; ++i) column[i] = kInitial[i];
  append_column(series, column);

  for (const GrigorchukState& state : grigorchuk_states(max_depth)) {
    const mpz_class* values[6] = {&state.x, &state.y, &state.z, &state.X, &state.Y, &state.Z};
    for (int i = 0; i < 16; ++i) column[i] = *values[kClass[i]];
    append_column(series, column);
    if (series.totals.back() != state.total()) throw std::logic_error("grigorchuk coset classes do not sum to a_n");
  }
  return series;
}

std::vector<std::vector<int>> circulant(const GgsVector& vector) {
  const int p = vector.p;
  std::vector<int> first{0};
  first.insert(first.end(), vector.e.begin(), vector.e.end());
  std::vector<std::vector<int>> out(p, std::vector<int>(p));
  for (int r = 0; r < p; ++r)
    for (int c = 0; c < p; ++c) out[r][c] = first[((c - r) % p + p) % p];
  return out;
}

GgsParameters ggs_parameters(const GgsVector& vector) {
  require_nonsymmetric(vector);
  const int p = vector.p;
  GgsParameters params{p, vector.e, 0, 0, circulant(vector)};
  unsigned long x1 = 0, y1 = 0;
  for_each_tuple(p, 0, p - 1, [&](const std::vector<int>& n) {
    const std::vector<int> i = times_circulant(n, params.circulant, p);
    int sum = 0;
    for (int r = 0; r < p; ++r) {
      if (i[r] * n[r] % p != 0) return;
      sum += n[r];
    }
    sum %= p;
    if (sum == 0) ++x1;
    if (sum == 1) ++y1;
  });
  params.x1 = x1;
  params.y1 = y1;
  return params;
}

ZCounts z_counts(int p, int l) {
  if (p < 2) throw Error(ErrorKind::BadPrime, "modulus must be at least 2");
  if (l < 0 || (l > p && l > 6)) throw Error(ErrorKind::InvalidArgument, "tuple length out of range");
  const mpz_class q = p - 1;
  const mpz_class sign = l % 2 == 0 ? 1 : -1;  // (-1)^l
  ZCounts counts{exact_quotient(pow(q, l) + sign * q, p), exact_quotient(pow(q, l) - sign, p), {}, {}};
  if (l <= 6) {
    unsigned long zero = 0, one = 0;
    if (l == 0)
      zero = 1;
    else
      for_each_tuple(l, 1, p - 1, [&](const std::vector<int>& tuple) {
        int sum = 0;
        for (int value : tuple) sum += value;
        sum %= p;
        if (sum == 0) ++zero;
        if (sum == 1 % p) ++one;
      });
    counts.brute_z = zero;
    counts.brute_z_prime = one;
    if (*counts.brute_z != counts.z || *counts.brute_z_prime != counts.z_prime)
      throw std::logic_error("z_counts closed form disagrees with enumeration");
  }
  return counts;
}

GrowthSeries ggs_growth(const GgsVector& vector, int max_depth) {
  require_depth(max_depth);
  const GgsParameters params = ggs_parameters(vector);
  const int p = vector.p;
  const unsigned long up = static_cast<unsigned long>(p);
  GrowthSeries series = empty_series("ggs-p" + std::to_string(p) + "-e" + vector.to_string(),
                                     Provenance::ClosedForm, ggs_labels(p));

  std::vector<mpz_class> column(up * up);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) column[i * p + j] = (i * j == 0) ? 1 : 0;
  append_column(series, column);

  std::vector<ZCounts> z;
  for (int l = 0; l <= p; ++l) z.push_back(z_counts(p, l));

  const mpz_class base = params.x1 + (p - 1) * params.y1;
  mpz_class x = params.x1, y = params.y1;
  for (int n = 1; n <= max_depth; ++n) {
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) column[i * p + j] = j == 0 ? x : y;
    append_column(series, column);
    const mpz_class closed = p * pow(base, static_cast<unsigned long>(mpz_class(pow(p, n - 1)).get_ui()));
    if (series.totals.back() != closed) throw std::logic_error("GGS closed form disagrees with the x/y recursion");
    if (n == max_depth) break;

    const mpz_class s = pow(x + (p - 1) * y, up);
    const mpz_class t = pow(x - y, up);
    const mpz_class next_x = exact_quotient(s + (p - 1) * t, up);
    const mpz_class next_y = exact_quotient(s - t, up);
    mpz_class binomial_x = 0, binomial_y = 0;
    for (int l = 0; l <= p; ++l) {
      const mpz_class term = pow(x, up - l) * pow(y, l) * binomial(up, l);
      binomial_x += term * z[l].z;
      binomial_y += term * z[l].z_prime;
    }
    if (next_x != binomial_x || next_y != binomial_y)
      throw std::logic_error("GGS x/y formulas disagree with the binomial form");
    if (next_x + (p - 1) * next_y != s) throw std::logic_error("GGS x + (p-1) y is not multiplicative");
    x = next_x;
    y = next_y;
  }
  return series;
}

GrowthSeries ggs_coset_recursion(const GgsVector& vector, int max_depth) {
  require_depth(max_depth);
  require_nonsymmetric(vector);
  const int p = vector.p;
  const auto c = circulant(vector);
  GrowthSeries series = empty_series("ggs-p" + std::to_string(p) + "-e" + vector.to_string(), Provenance::Generic,
                                     ggs_labels(p));

  std::vector<mpz_class> column(static_cast<std::size_t>(p * p));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) column[i * p + j] = (i * j == 0) ? 1 : 0;
  append_column(series, column);

  for (int n = 1; n <= max_depth; ++n) {
    std::vector<mpz_class> by_sum(static_cast<std::size_t>(p), 0);
    for_each_tuple(p, 0, p - 1, [&](const std::vector<int>& tuple) {
      const std::vector<int> i = times_circulant(tuple, c, p);
      mpz_class product = 1;
      int sum = 0;
      for (int r = 0; r < p && product != 0; ++r) {
        product *= column[i[r] * p + tuple[r]];
        sum += tuple[r];
      }
      by_sum[sum % p] += product;
    });
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) column[i * p + j] = by_sum[j];
    append_column(series, column);
  }
  return series;
}

GrowthSeries apollonian_growth(int max_depth) {
  require_depth(max_depth);
  GrowthSeries series = empty_series("apollonian", Provenance::ClosedForm, {"1", "x"});
  mpz_class x = 1, y = 6;
  for (int n = 0; n <= max_depth; ++n) {
    append_column(series, {x, y});
    const mpz_class three_n = pow(3, static_cast<unsigned long>(n));
    const mpz_class closed = pow(3, mpz_class((three_n - 1) / 2).get_ui()) * pow(7, three_n.get_ui());
    if (x + y != closed) throw std::logic_error("Apollonian closed form disagrees with the X/Y recursion");
    const mpz_class next_x = 3 * x * x * x + 9 * x * y * y;
    const mpz_class next_y = 3 * y * y * y + 9 * x * x * y;
    x = next_x;
    y = next_y;
  }
  return series;
}

}  // namespace pgrowth
