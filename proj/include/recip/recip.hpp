#pragma once

#include "recip/core.hpp"
#include "recip/matrix.hpp"
#include "recip/numtheory.hpp"
#include "recip/parse.hpp"
#include "recip/poly.hpp"
#include "recip/reciprocal.hpp"
#include "recip/report.hpp"
#include "recip/resultant.hpp"
#include "recip/verify.hpp"
