#pragma once

#include "qucouple/circuit.hpp"
#include "qucouple/effective_model.hpp"
#include "qucouple/eigensolver.hpp"
#include "qucouple/entanglement.hpp"
#include "qucouple/errors.hpp"
#include "qucouple/exact_bench.hpp"
#include "qucouple/io.hpp"
#include "qucouple/matrix.hpp"
#include "qucouple/sweep_engine.hpp"
#include "qucouple/thermal_state.hpp"
#include "qucouple/units.hpp"
#include "qucouple/version.hpp"
