#pragma once

#include "dualcurve/curve.hpp"
#include "dualcurve/dual.hpp"
#include "dualcurve/equiaffine.hpp"
#include "dualcurve/error.hpp"
#include "dualcurve/expression.hpp"
#include "dualcurve/lorentz.hpp"
#include "dualcurve/numerics.hpp"
#include "dualcurve/polynomial.hpp"
#include "dualcurve/verify.hpp"
