#ifndef DIRICHLET_DIRICHLET_HPP
#define DIRICHLET_DIRICHLET_HPP

#include "dirichlet/bernoulli.hpp"
#include "dirichlet/complex.hpp"
#include "dirichlet/context.hpp"
#include "dirichlet/engine.hpp"
#include "dirichlet/exact.hpp"
#include "dirichlet/faulhaber.hpp"
#include "dirichlet/functions.hpp"
#include "dirichlet/indicator.hpp"
#include "dirichlet/real.hpp"
#include "dirichlet/sieve.hpp"
#include "dirichlet/summatory.hpp"
#include "dirichlet/zeta.hpp"
#include "dirichlet/zeta_table.hpp"

#endif  // DIRICHLET_DIRICHLET_HPP
