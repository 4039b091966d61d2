#include "disting/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "disting/errors.hpp"
#include "disting/families.hpp"

namespace disting {

namespace {

constexpr long long saturation_cap = std::numeric_limits<long long>::max() / 4;

// base^exp saturated at saturation_cap so comparisons stay safe.
long long saturating_power(long long base, int exp) {
  long long result = 1;
  for (int i = 0; i < exp; ++i) {
    if (result > saturation_cap / base) return saturation_cap;
    result *= base;
  }
  return result;
}

parameter_result exact(parameter p, int value, method how) {
  return parameter_result{p, value, value, how, std::nullopt};
}

// Whether k^2 (k-1) >= 2n, the integer form of the friendship-root test.
bool friendship_reached(long long k, long long n) {
  __int128 lhs = static_cast<__int128>(k) * k * (k - 1);
  return lhs >= static_cast<__int128>(2) * n;
}

}  // namespace

parameter_result d_prime_complete_bipartite(int p, int q,
                                            bool resolve_boundary,
                                            const search_options& opts) {
  if (p < 1 || q < 1) {
    throw parameter_error("complete bipartite sides must be positive");
  }
  if (p > q) std::swap(p, q);

  if (p == q) {
    if (p == 1) {
      throw parameter_error(
          "K_{1,1} is a single edge and has no distinguishing edge labeling");
    }
    // The side swap is an extra symmetry the shifted-grid argument does not
    // break: two and three labels are not enough until the sides reach four.
    return exact(parameter::d_prime, p <= 3 ? 3 : 2, method::closed_form);
  }

  int r = 2;
  while (saturating_power(r, p) < q) ++r;
  int ceil_log = 0;
  while (saturating_power(r, ceil_log) < p) ++ceil_log;
  long long threshold = saturating_power(r, p) - ceil_log;

  if (q <= threshold - 1) return exact(parameter::d_prime, r, method::closed_form);
  if (q >= threshold + 1) {
    return exact(parameter::d_prime, r + 1, method::closed_form);
  }
  if (resolve_boundary) {
    return compute_distinguishing_index(make_complete_bipartite(q, p), opts);
  }
  return parameter_result{parameter::d_prime, r, r + 1, method::bounds,
                          std::nullopt};
}

parameter_result d_prime_friendship(int n) {
  if (n < 2) throw parameter_error("friendship graph requires n >= 2");

  double root = std::sqrt(81.0 * n * n + 6.0 * n);
  double a = 1.0 + 27.0 * n + 3.0 * root;
  double cr = std::cbrt(a);
  double x = cr / 3.0 + 1.0 / (3.0 * cr) + 1.0 / 3.0;
  long long candidate = static_cast<long long>(std::ceil(x));
  if (std::fabs(x - std::nearbyint(x)) < 1e-6) {
    candidate = static_cast<long long>(std::llround(x));
  }

  // The candidate is the ceiling of the root of x^2 (x-1) = 2n, i.e. the
  // least k >= 2 with k^2 (k-1) >= 2n.  Settle boundary rounding exactly.
  candidate = std::max<long long>(candidate, 2);
  while (!friendship_reached(candidate, n)) ++candidate;
  while (candidate > 2 && friendship_reached(candidate - 1, n)) --candidate;
  return exact(parameter::d_prime, static_cast<int>(candidate),
               method::closed_form);
}

parameter_result d_prime_star_path(int n, int m) {
  if (n < 2 || m < 2) {
    throw parameter_error("star-path product requires n >= 2 and m >= 2");
  }
  if (m == 2) {
    long long r = static_cast<long long>(std::llround(std::cbrt(n)));
    for (long long c : {r - 1, r, r + 1}) {
      if (c >= 1 && c * c * c == n) {
        return exact(parameter::d_prime, static_cast<int>(c) + 1,
                     method::closed_form);
      }
    }
  }
  int exponent = 2 * m - 1;
  int k = 1;
  while (saturating_power(k, exponent) < n) ++k;
  return exact(parameter::d_prime, k, method::closed_form);
}

}  // namespace disting
