// Umbrella header.
#pragma once

#include "multibrot/analytic.hpp"
#include "multibrot/dynamics.hpp"
#include "multibrot/geometry.hpp"
#include "multibrot/io.hpp"
#include "multibrot/multicomplex.hpp"
#include "multibrot/parallel.hpp"
#include "multibrot/verify.hpp"
