#ifndef MINORCLIQUE_MINORCLIQUE_HPP
#define MINORCLIQUE_MINORCLIQUE_HPP

#include "minorclique/big_count.hpp"
#include "minorclique/bounds.hpp"
#include "minorclique/cliques.hpp"
#include "minorclique/constructions.hpp"
#include "minorclique/errors.hpp"
#include "minorclique/graph.hpp"
#include "minorclique/graph_io.hpp"
#include "minorclique/log_value.hpp"
#include "minorclique/minors.hpp"
#include "minorclique/parallel.hpp"
#include "minorclique/peeling.hpp"
#include "minorclique/turan.hpp"
#include "minorclique/verify.hpp"
#include "minorclique/vertex_set.hpp"

#endif  // MINORCLIQUE_MINORCLIQUE_HPP
