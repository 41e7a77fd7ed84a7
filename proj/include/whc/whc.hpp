// whc.hpp — umbrella header.
#pragma once

#include "whc/bipartite_graph.hpp"
#include "whc/closure.hpp"
#include "whc/conditions.hpp"
#include "whc/enumeration.hpp"
#include "whc/families.hpp"
#include "whc/graph_io.hpp"
#include "whc/isomorphism.hpp"
#include "whc/oracle.hpp"
#include "whc/prng.hpp"
#include "whc/reporting.hpp"
#include "whc/spectral.hpp"
