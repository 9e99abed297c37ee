#ifndef DIRICHLET_BERNOULLI_HPP
#define DIRICHLET_BERNOULLI_HPP

#include <algorithm>
#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "dirichlet/exact.hpp"

namespace dirichlet {
namespace detail {

// Tangent numbers T_1..T_m by the integer triangle recurrence:
// tan x = sum T_k x^{2k-1}/(2k-1)!.  O(m^2) integer ops, no rationals.
inline std::vector<Int> tangent_numbers(std::size_t m) {
  std::vector<Int> t(m + 1);
  if (m == 0) return t;
  t[1] = 1;
  for (std::size_t k = 2; k <= m; ++k) t[k] = t[k - 1] * static_cast<long>(k - 1);
  for (std::size_t k = 2; k <= m; ++k)
    for (std::size_t j = k; j <= m; ++j)
      t[j] = t[j - 1] * static_cast<long>(j - k) + t[j] * static_cast<long>(j - k + 2);
  return t;
}

// even[j] = B_{2j}, grown on demand under one lock
struct BernoulliCache {
  std::mutex mu;
  std::vector<Rational> even;

  Rational get(std::size_t j) {
    std::lock_guard<std::mutex> lock(mu);
    if (j >= even.size()) {
      std::size_t m = std::max<std::size_t>({j, 32, even.size() * 2});
      auto t = tangent_numbers(m);
      std::vector<Rational> fresh(m + 1);
      fresh[0] = 1;
      Int four_n = 1;
      for (std::size_t n = 1; n <= m; ++n) {
        four_n *= 4;
        // |B_{2n}| = 2n T_n / (4^n (4^n - 1)), sign (-1)^{n+1}
        Rational b(t[n] * static_cast<long>(2 * n), four_n * (four_n - 1));
        fresh[n] = (n % 2 == 1) ? b : -b;
      }
      even.swap(fresh);
    }
    return even[j];
  }

  static BernoulliCache& instance() {
    static BernoulliCache c;
    return c;
  }
};

}  // namespace detail

// Exact Bernoulli number B_k for even k (B_1 is never needed by the series).
inline Rational bernoulli(long k) {
  if (k < 0 || k % 2 != 0) throw std::domain_error("bernoulli: k must be even and non-negative");
  return detail::BernoulliCache::instance().get(static_cast<std::size_t>(k / 2));
}

}  // namespace dirichlet

#endif  // DIRICHLET_BERNOULLI_HPP
