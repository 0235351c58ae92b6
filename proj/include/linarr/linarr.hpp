#pragma once

#include "linarr/bounds.hpp"
#include "linarr/ensembles.hpp"
#include "linarr/error.hpp"
#include "linarr/exact.hpp"
#include "linarr/graph.hpp"
#include "linarr/io.hpp"
#include "linarr/moments.hpp"
#include "linarr/oracle.hpp"
#include "linarr/random.hpp"
#include "linarr/significance.hpp"
#include "linarr/stats.hpp"
