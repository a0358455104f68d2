#pragma once

#include "lvar/distribution.hpp"
#include "lvar/duality.hpp"
#include "lvar/error.hpp"
#include "lvar/extended_real.hpp"
#include "lvar/loss_profile.hpp"
#include "lvar/piecewise.hpp"
#include "lvar/risk.hpp"
