#pragma once

// Umbrella header for the whole library.

#include "ctm/brute_force.hpp"
#include "ctm/dimensions.hpp"
#include "ctm/finite_group.hpp"
#include "ctm/haar.hpp"
#include "ctm/moments.hpp"
#include "ctm/monte_carlo.hpp"
#include "ctm/partition.hpp"
#include "ctm/rational.hpp"
#include "ctm/rng.hpp"
#include "ctm/serialize.hpp"
#include "ctm/staircase.hpp"
#include "ctm/updown.hpp"
