#pragma once

#include "tscolor/bounds.hpp"
#include "tscolor/event_graph.hpp"
#include "tscolor/generators.hpp"
#include "tscolor/hypergraph.hpp"
#include "tscolor/oracle.hpp"
#include "tscolor/rng.hpp"
#include "tscolor/solver.hpp"
