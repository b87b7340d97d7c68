#pragma once

#include "discmom/errors.hpp"
#include "discmom/rational.hpp"
#include "discmom/polynomial.hpp"
#include "discmom/moments.hpp"
#include "discmom/grid.hpp"
#include "discmom/linalg.hpp"
#include "discmom/roots.hpp"
#include "discmom/measure.hpp"
#include "discmom/stieltjes.hpp"
#include "discmom/solver.hpp"
#include "discmom/sufficiency.hpp"
#include "discmom/oracle.hpp"
