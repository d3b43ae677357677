#pragma once

#include "domcells/error.hpp"
#include "domcells/vertex_set.hpp"
#include "domcells/graph.hpp"
#include "domcells/domination.hpp"
#include "domcells/product.hpp"
#include "domcells/cells.hpp"
#include "domcells/bounds.hpp"
#include "domcells/worked_examples.hpp"
#include "domcells/serialize.hpp"
#include "domcells/svg.hpp"
#include "domcells/harness.hpp"
