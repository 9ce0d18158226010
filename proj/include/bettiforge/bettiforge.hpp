#pragma once

// Umbrella header: graded Betti tables and regularity of the hyperedge ideal
// of the r-connectedness hypergraph of a graph, by closed-form family
// formulas and by a brute-force Hochster-formula oracle.

#include "betti_table.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "exact_linalg.hpp"
#include "formulas.hpp"
#include "graph.hpp"
#include "graph_spec.hpp"
#include "hochster.hpp"
#include "homology.hpp"
#include "render.hpp"
#include "subsets.hpp"
