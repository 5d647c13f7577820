#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "pgrowth/catalog.h"
#include "pgrowth/growth_series.h"

namespace pgrowth {

/// The six coset-class counts of the Grigorchuk recursion at one depth n >= 1.
struct GrigorchukState {
  mpz_class x, y, z, X, Y, Z;

  mpz_class total() const { return 2 * x + 4 * y + 2 * z + 2 * X + 4 * Y + 2 * Z; }
  GrigorchukState next() const;
};

/// States for n = 1..max_depth (empty when max_depth < 1).
std::vector<GrigorchukState> grigorchuk_states(int max_depth);

/// Specialized six-variable recursion. Per-coset rows follow the order of
/// grigorchuk_branch_setup().transversal.
GrowthSeries grigorchuk_growth(int max_depth);

struct GgsParameters {
  int p = 3;
  std::vector<int> e;
  mpz_class x1, y1;
  std::vector<std::vector<int>> circulant;  // rows are cyclic shifts of (0, e_1, ..., e_{p-1})
};

/// Circulant matrix C(0, e).
std::vector<std::vector<int>> circulant(const GgsVector& vector);

/// Counts n in F_p^p with (n C) * n = 0 coordinatewise, split by coordinate
/// sum 0 (x1) and 1 (y1). Throws NonSymmetricRequired for symmetric e.
GgsParameters ggs_parameters(const GgsVector& vector);

struct ZCounts {
  mpz_class z, z_prime;                              // closed forms
  std::optional<mpz_class> brute_z, brute_z_prime;   // enumeration, for l <= 6
};

/// Nowhere-zero l-tuples over F_p summing to 0 and to 1. Requires 0 <= l <= p
/// or l <= 6. Throws std::logic_error if closed form and enumeration differ.
ZCounts z_counts(int p, int l);

/// Closed form a_n = p (x1 + (p-1) y1)^(p^(n-1)), cross-checked against the
/// explicit x/y recursion and its binomial form. Per-coset rows are a^i b^j in
/// row-major order. Throws NonSymmetricRequired, ExactDivisionFailure.
GrowthSeries ggs_growth(const GgsVector& vector, int max_depth);

/// The p^2-coset recursion p_{n+1}(i,j) = sum over sum(n) = j of
/// prod_r p_n(i_r, n_r), evaluated without the symmetry reduction. Costs
/// p^p products per step, so it is meant as an oracle for small p.
GrowthSeries ggs_coset_recursion(const GgsVector& vector, int max_depth);

/// Closed form 3^((3^n - 1)/2) 7^(3^n), cross-checked against the X/Y
/// recursion from X_0 = 1, Y_0 = 6. Per-coset rows are the even and odd
/// cosets.
GrowthSeries apollonian_growth(int max_depth);

}  // namespace pgrowth
