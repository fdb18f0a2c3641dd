#pragma once

#include "ordtrail/edge_list.hpp"
#include "ordtrail/error.hpp"
#include "ordtrail/extremal.hpp"
#include "ordtrail/graph.hpp"
#include "ordtrail/labeling.hpp"
#include "ordtrail/oracle.hpp"
#include "ordtrail/random.hpp"
#include "ordtrail/trail.hpp"
#include "ordtrail/weight.hpp"
