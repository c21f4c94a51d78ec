#pragma once

#include "spincert/error.hpp"
#include "spincert/gam.hpp"
#include "spincert/index.hpp"
#include "spincert/integer.hpp"
#include "spincert/lattice.hpp"
#include "spincert/quadratic.hpp"
#include "spincert/simplicity.hpp"
#include "spincert/surface.hpp"
#include "spincert/verdict.hpp"
#include "spincert/walls.hpp"
