#pragma once

// Convenience umbrella header.

#include "rotorkit/airfoil_polar.hpp"
#include "rotorkit/cli.hpp"
#include "rotorkit/design_search.hpp"
#include "rotorkit/errors.hpp"
#include "rotorkit/polar_csv.hpp"
#include "rotorkit/report_csv.hpp"
#include "rotorkit/rotor_model.hpp"
#include "rotorkit/run_config.hpp"
#include "rotorkit/util.hpp"
#include "rotorkit/wind_resource.hpp"
