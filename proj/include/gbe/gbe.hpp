#pragma once

// Everything in one include, except the JSON views in gbe/json.hpp.

#include "gbe/cone.hpp"
#include "gbe/error.hpp"
#include "gbe/graph.hpp"
#include "gbe/grid.hpp"
#include "gbe/groebner.hpp"
#include "gbe/linalg.hpp"
#include "gbe/lp.hpp"
#include "gbe/monomial.hpp"
#include "gbe/polynomial.hpp"
#include "gbe/registry.hpp"
#include "gbe/resolution.hpp"
#include "gbe/sagbi.hpp"
