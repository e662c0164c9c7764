#pragma once

#include "cactuswp/cactus_structure.hpp"
#include "cactuswp/distance_oracle.hpp"
#include "cactuswp/error.hpp"
#include "cactuswp/generators.hpp"
#include "cactuswp/graph.hpp"
#include "cactuswp/polarity_formula.hpp"
