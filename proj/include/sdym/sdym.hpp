#pragma once

#include "sdym/algebra.hpp"
#include "sdym/lattice.hpp"
#include "sdym/cochain.hpp"
#include "sdym/curvature.hpp"
#include "sdym/hodge.hpp"
#include "sdym/problem.hpp"
#include "sdym/duality.hpp"
#include "sdym/solver.hpp"
