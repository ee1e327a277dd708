#pragma once

#include "resolvent/corpus.hpp"
#include "resolvent/error.hpp"
#include "resolvent/graph.hpp"
#include "resolvent/invariants.hpp"
#include "resolvent/metric.hpp"
#include "resolvent/vertex_set.hpp"
