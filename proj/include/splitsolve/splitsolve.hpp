#pragma once

// Umbrella header for the splitsolve library.

#include "splitsolve/diagnostics.hpp"
#include "splitsolve/errors.hpp"
#include "splitsolve/maps.hpp"
#include "splitsolve/operator.hpp"
#include "splitsolve/paper_tables.hpp"
#include "splitsolve/point.hpp"
#include "splitsolve/problem.hpp"
#include "splitsolve/problem_library.hpp"
#include "splitsolve/schedule.hpp"
#include "splitsolve/schemes.hpp"
#include "splitsolve/sets.hpp"
#include "splitsolve/solve.hpp"
#include "splitsolve/spectral.hpp"
#include "splitsolve/trace_csv.hpp"
