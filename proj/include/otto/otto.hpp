#pragma once

#include "otto/bisection.hpp"
#include "otto/constants.hpp"
#include "otto/core.hpp"
#include "otto/errors.hpp"
#include "otto/matrix2.hpp"
#include "otto/oracle.hpp"
#include "otto/params.hpp"
#include "otto/regimes.hpp"
#include "otto/sweep.hpp"
#include "otto/verify.hpp"
