#ifndef DBIC_DBIC_HPP
#define DBIC_DBIC_HPP

#include "dbic/balls.hpp"
#include "dbic/codes.hpp"
#include "dbic/error.hpp"
#include "dbic/graph.hpp"
#include "dbic/json.hpp"
#include "dbic/metrics.hpp"
#include "dbic/strings.hpp"
#include "dbic/sweep.hpp"
#include "dbic/vertex_set.hpp"

#endif  // DBIC_DBIC_HPP
