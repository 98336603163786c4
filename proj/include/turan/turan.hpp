#pragma once

// Umbrella header: rooted graphs, exact densities, family constructors,
// realisation chains, embedding search, constructive lemmas and the
// brute-force extremal oracle.

#include "turan/density.hpp"
#include "turan/drc.hpp"
#include "turan/embedding.hpp"
#include "turan/errors.hpp"
#include "turan/exponent.hpp"
#include "turan/families.hpp"
#include "turan/graph.hpp"
#include "turan/host.hpp"
#include "turan/isomorphism.hpp"
#include "turan/json_io.hpp"
#include "turan/lemmas.hpp"
#include "turan/matching.hpp"
#include "turan/oracle.hpp"
#include "turan/rational.hpp"
#include "turan/search.hpp"
#include "turan/transforms.hpp"
