#pragma once

#include "plinc/configuration.hpp"
#include "plinc/errors.hpp"
#include "plinc/export.hpp"
#include "plinc/gon.hpp"
#include "plinc/intpoly.hpp"
#include "plinc/json_io.hpp"
#include "plinc/lowerbound.hpp"
#include "plinc/matching.hpp"
#include "plinc/numbertheory.hpp"
#include "plinc/pattern.hpp"
#include "plinc/projective.hpp"
#include "plinc/quadext.hpp"
#include "plinc/rational.hpp"
#include "plinc/rng.hpp"
#include "plinc/scalar.hpp"
#include "plinc/search.hpp"
