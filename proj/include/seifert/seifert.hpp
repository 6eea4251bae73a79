#pragma once

#include "seifert/numeric.hpp"
#include "seifert/errors.hpp"
#include "seifert/invariants.hpp"
#include "seifert/admissibility.hpp"
#include "seifert/torus_mcg.hpp"
#include "seifert/filling.hpp"
#include "seifert/surface_involutions.hpp"
#include "seifert/census.hpp"
