#pragma once

// Exact-arithmetic toolkit for toric local uniformization: integer lattices,
// ordered value groups, fans, binomial ideals, resolution pipelines, Perron
// transforms and abyssal rewriting valuations.

#include "binomial.hpp"
#include "cones.hpp"
#include "error.hpp"
#include "json_io.hpp"
#include "linalg.hpp"
#include "ordered_group.hpp"
#include "perron.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "resolution.hpp"
#include "rewrite.hpp"
