/**
 * Umbrella header for the gorenstein library.
 */

#ifndef GORENSTEIN_GORENSTEIN_HPP
#define GORENSTEIN_GORENSTEIN_HPP

#include "graph.hpp"
#include "complex.hpp"
#include "homology.hpp"
#include "criteria.hpp"
#include "survey.hpp"

#endif
