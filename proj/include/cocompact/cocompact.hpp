#pragma once

#include "rational.hpp"
#include "interval_set.hpp"
#include "piecewise_map.hpp"
#include "cover.hpp"
#include "entropy.hpp"
#include "bowen.hpp"
#include "lebesgue.hpp"
#include "shift.hpp"
#include "generators.hpp"
#include "io.hpp"
#include "verify.hpp"
