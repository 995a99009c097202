#pragma once

#include "avgconn/aux_digraph.hpp"
#include "avgconn/connected_sets.hpp"
#include "avgconn/families.hpp"
#include "avgconn/generate.hpp"
#include "avgconn/graph.hpp"
#include "avgconn/numeric.hpp"
#include "avgconn/scan.hpp"
#include "avgconn/tree_dp.hpp"
#include "avgconn/vertex_set.hpp"
