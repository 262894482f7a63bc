#pragma once

// Umbrella header for the nestsearch library.

#include "nestsearch/benchmarks.hpp"
#include "nestsearch/cuckoo.hpp"
#include "nestsearch/experiment.hpp"
#include "nestsearch/ga.hpp"
#include "nestsearch/levy.hpp"
#include "nestsearch/pso.hpp"
#include "nestsearch/report.hpp"
#include "nestsearch/rng.hpp"
#include "nestsearch/search_space.hpp"
#include "nestsearch/solver.hpp"
#include "nestsearch/statistics.hpp"
