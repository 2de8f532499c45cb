#ifndef SUGENO_HPP
#define SUGENO_HPP

// Everything except the command-line front end.

#include "sugeno/chebyshev.hpp"
#include "sugeno/dependence.hpp"
#include "sugeno/expr.hpp"
#include "sugeno/fusion.hpp"
#include "sugeno/integral.hpp"
#include "sugeno/measure.hpp"
#include "sugeno/properties.hpp"
#include "sugeno/random.hpp"
#include "sugeno/shape.hpp"

#endif
