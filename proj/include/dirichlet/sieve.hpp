#ifndef DIRICHLET_SIEVE_HPP
#define DIRICHLET_SIEVE_HPP

#include <cstddef>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dirichlet/exact.hpp"

namespace dirichlet {

struct Factor {
  long p;
  int e;
};

// Smallest-prime-factor sieve with lazily materialized derived tables.
class Sieve {
public:
  explicit Sieve(long n) : n_(n) {
    if (n < 2 || n > 100000000L) throw std::domain_error("Sieve: bound must lie in [2, 1e8]");
    spf_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (long i = 2; i <= n; ++i) {
      if (spf_[i] == 0) {
        primes_.push_back(i);
        spf_[i] = i;
      }
      for (long p : primes_) {
        if (p > spf_[i] || i * p > n) break;
        spf_[i * p] = p;
      }
    }
  }

  long bound() const { return n_; }
  long spf(long n) const {
    check(n);
    return n < 2 ? 0 : spf_[n];
  }
  bool is_prime(long n) const { return n >= 2 && spf(n) == n; }
  const std::vector<long>& primes() const { return primes_; }
  long nth_prime(std::size_t i) const {  // 1-based
    if (i == 0 || i > primes_.size()) throw std::domain_error("Sieve: prime index out of range");
    return primes_[i - 1];
  }

  std::vector<Factor> factor(long n) const {
    check(n);
    std::vector<Factor> fs;
    while (n > 1) {
      long p = spf_[n];
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      fs.push_back({p, e});
    }
    return fs;
  }

  int moebius(long n) const {
    check(n);
    int m = 1;
    long x = n;
    while (x > 1) {
      long p = spf_[x];
      x /= p;
      if (x % p == 0) return 0;
      m = -m;
    }
    return m;
  }

  int abs_moebius(long n) const { return moebius(n) != 0 ? 1 : 0; }

  int big_omega(long n) const {
    check(n);
    int c = 0;
    for (long x = n; x > 1; x /= spf_[x]) ++c;
    return c;
  }

  int omega(long n) const {
    int c = 0;
    for (const auto& f : factor(n)) {
      (void)f;
      ++c;
    }
    return c;
  }

  int liouville(long n) const { return big_omega(n) % 2 == 0 ? 1 : -1; }

  long divisor_count(long n) const {
    long d = 1;
    for (const auto& f : factor(n)) d *= f.e + 1;
    return d;
  }

  // sum of m-th powers of divisors, any integer m
  Rational sigma(long n, long m) const {
    Rational s = 1;
    for (const auto& f : factor(n)) {
      Rational pm = m >= 0 ? Rational(pow(Int(f.p), static_cast<unsigned>(m)))
                           : Rational(1, pow(Int(f.p), static_cast<unsigned>(-m)));
      Rational factor_sum = 1, term = 1;
      for (int a = 1; a <= f.e; ++a) {
        term *= pm;
        factor_sum += term;
      }
      s *= factor_sum;
    }
    return s;
  }

  // sum of m-th powers of the square-free divisors
  Rational squarefree_sigma(long n, long m) const {
    Rational s = 1;
    for (const auto& f : factor(n)) {
      Rational pm = m >= 0 ? Rational(pow(Int(f.p), static_cast<unsigned>(m)))
                           : Rational(1, pow(Int(f.p), static_cast<unsigned>(-m)));
      s *= 1 + pm;
    }
    return s;
  }

  // (p, k) if n = p^k, else (0, 0)
  std::pair<long, int> mangoldt_pk(long n) const {
    check(n);
    if (n < 2) return {0, 0};
    long p = spf_[n];
    int k = 0;
    long x = n;
    while (x % p == 0) {
      x /= p;
      ++k;
    }
    return x == 1 ? std::make_pair(p, k) : std::make_pair(0L, 0);
  }

  // 1/k on prime powers p^k, else 0
  Rational mangoldt_over_log(long n) const {
    auto [p, k] = mangoldt_pk(n);
    return p == 0 ? Rational(0) : Rational(1, k);
  }

  // q-fold Dirichlet self-convolution of mu; q=0 is the unit function,
  // negative q gives the divisor-count family (generated by zeta^{-q})
  Int moebius_q(long n, long q) const {
    check(n);
    const std::vector<Int>& t = moebius_q_table(q);
    return t[n];
  }

  // full table [0..bound] for a given q, built by repeated convolution
  const std::vector<Int>& moebius_q_table(long q) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = mu_q_.find(q);
    if (it != mu_q_.end()) return it->second;
    std::size_t nn = static_cast<std::size_t>(n_);
    std::vector<Int> acc(nn + 1);
    acc[1] = 1;  // unit function
    if (q != 0) {
      std::vector<Int> base(nn + 1);
      if (q > 0)
        for (std::size_t i = 1; i <= nn; ++i) base[i] = moebius(static_cast<long>(i));
      else
        for (std::size_t i = 1; i <= nn; ++i) base[i] = 1;
      long reps = q > 0 ? q : -q;
      for (long r = 0; r < reps; ++r) acc = convolve(acc, base);
    }
    return mu_q_.emplace(q, std::move(acc)).first->second;
  }

  // Mertens function
  long mertens(long x) const {
    check(x);
    long s = 0;
    for (long n = 1; n <= x; ++n) s += moebius(n);
    return s;
  }

  long prime_pi(long x) const {
    check(x);
    long c = 0;
    for (long p : primes_) {
      if (p > x) break;
      ++c;
    }
    return c;
  }

  // J(x) = sum over prime powers p^k <= x of 1/k, exact
  Rational prime_power_count(long x) const {
    check(x);
    Rational s = 0;
    for (long p : primes_) {
      if (p > x) break;
      long pk = p;
      int k = 1;
      while (true) {
        s += Rational(1, k);
        if (pk > x / p) break;
        pk *= p;
        ++k;
      }
    }
    return s;
  }

  // sum_{n<=x} d(n) = sum_{d<=x} floor(x/d)
  Int divisor_summatory(long x) const {
    check(x);
    Int s = 0;
    for (long d = 1; d <= x; ++d) s += x / d;
    return s;
  }

private:
  void check(long n) const {
    if (n < 0 || n > n_) throw std::domain_error("Sieve: argument exceeds sieve bound");
  }
  static std::vector<Int> convolve(const std::vector<Int>& f, const std::vector<Int>& g) {
    std::vector<Int> out(f.size());
    std::size_t n = f.size() - 1;
    for (std::size_t d = 1; d <= n; ++d) {
      if (f[d] == 0) continue;
      for (std::size_t m = d; m <= n; m += d) out[m] += f[d] * g[m / d];
    }
    return out;
  }

  long n_;
  std::vector<long> spf_;
  std::vector<long> primes_;
  mutable std::mutex mu_;
  mutable std::map<long, std::vector<Int>> mu_q_;
};

inline Sieve build_sieve(long n) { return Sieve(n); }

// Growable list of primes for consumers that need "the first k primes"
// rather than "primes below N".
class PrimeSource {
public:
  explicit PrimeSource(long initial_bound = 1 << 16) { grow_to(initial_bound); }

  const std::vector<long>& primes() const { return primes_; }
  long bound() const { return bound_; }

  long nth(std::size_t i) {  // 1-based
    while (primes_.size() < i) grow_to(bound_ * 2);
    return primes_[i - 1];
  }

  void ensure_count(std::size_t k) {
    while (primes_.size() < k) grow_to(bound_ * 2);
  }
  void ensure_bound(long n) {
    if (n > bound_) grow_to(n);
  }

private:
  void grow_to(long n) {
    if (n <= bound_) return;
    std::vector<bool> comp(static_cast<std::size_t>(n) + 1, false);
    primes_.clear();
    for (long i = 2; i <= n; ++i) {
      if (!comp[i]) {
        primes_.push_back(i);
        for (long j = i * i; j <= n; j += i) comp[j] = true;
        if (i > n / i) {
          for (long j = i + 1; j <= n; ++j)
            if (!comp[j]) primes_.push_back(j);
          break;
        }
      }
    }
    bound_ = n;
  }

  long bound_ = 0;
  std::vector<long> primes_;
};

}  // namespace dirichlet

#endif  // DIRICHLET_SIEVE_HPP
