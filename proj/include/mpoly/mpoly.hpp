#ifndef MPOLY_MPOLY_HPP
#define MPOLY_MPOLY_HPP

#include "mpoly/errors.hpp"
#include "mpoly/rational.hpp"
#include "mpoly/exact.hpp"
#include "mpoly/polynomial.hpp"
#include "mpoly/report.hpp"
#include "mpoly/special.hpp"
#include "mpoly/family.hpp"
#include "mpoly/diffop.hpp"
#include "mpoly/ortho.hpp"
#include "mpoly/genfun.hpp"
#include "mpoly/numint.hpp"
#include "mpoly/suite.hpp"
#include "mpoly/format.hpp"

#endif  // MPOLY_MPOLY_HPP
