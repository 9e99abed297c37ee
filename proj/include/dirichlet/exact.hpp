#ifndef DIRICHLET_EXACT_HPP
#define DIRICHLET_EXACT_HPP

#include <boost/multiprecision/gmp.hpp>

#include "dirichlet/real.hpp"

namespace dirichlet {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Real to_real(const Int& x, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_z(r.raw(), x.backend().data(), MPFR_RNDN);
  return r;
}

inline Real to_real(const Rational& x, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.raw(), x.backend().data(), MPFR_RNDN);
  return r;
}

// binomial coefficient, exact
inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.backend().data(), n, k);
  return r;
}

}  // namespace dirichlet

#endif  // DIRICHLET_EXACT_HPP
