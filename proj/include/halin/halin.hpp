#pragma once

#include "halin/absorb.hpp"
#include "halin/connectivity.hpp"
#include "halin/cycles.hpp"
#include "halin/error.hpp"
#include "halin/experiment.hpp"
#include "halin/generators.hpp"
#include "halin/graph.hpp"
#include "halin/ham_path.hpp"
#include "halin/io.hpp"
#include "halin/ladder.hpp"
#include "halin/ladder_finder.hpp"
#include "halin/matching.hpp"
#include "halin/search.hpp"
#include "halin/templates.hpp"
#include "halin/verify.hpp"
