#pragma once

#include "maxmin/bijection.hpp"
#include "maxmin/blocks.hpp"
#include "maxmin/eulerian.hpp"
#include "maxmin/format.hpp"
#include "maxmin/maxmin_tree.hpp"
#include "maxmin/min_decomp.hpp"
#include "maxmin/partitions.hpp"
#include "maxmin/permutation.hpp"
#include "maxmin/polynomial.hpp"
#include "maxmin/weight.hpp"
