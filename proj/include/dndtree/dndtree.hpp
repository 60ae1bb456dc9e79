#pragma once

#include "error.hpp"
#include "types.hpp"
#include "dynamic_graph.hpp"
#include "rooted_forest.hpp"
#include "id_forest.hpp"
#include "ds_forest.hpp"
#include "dnd_index.hpp"
#include "two_ecc.hpp"
#include "oracle.hpp"
#include "random.hpp"
#include "workload.hpp"
#include "fuzz.hpp"
