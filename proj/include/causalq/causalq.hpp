#pragma once

#include "causalq/families.hpp"
#include "causalq/gates.hpp"
#include "causalq/popt.hpp"
#include "causalq/qlin.hpp"
#include "causalq/random.hpp"
#include "causalq/report.hpp"
#include "causalq/serialization.hpp"
#include "causalq/steering.hpp"
#include "causalq/suites.hpp"
#include "causalq/timeorder.hpp"
