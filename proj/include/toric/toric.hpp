#pragma once

#include "toric/exactlin.hpp"
#include "toric/binomial.hpp"
#include "toric/groebner.hpp"
#include "toric/graph.hpp"
#include "toric/toric_ideal.hpp"
#include "toric/rank.hpp"
#include "toric/betti.hpp"
#include "toric/resolve.hpp"
#include "toric/splitkit.hpp"
#include "toric/corpus.hpp"
#include "toric/io.hpp"
