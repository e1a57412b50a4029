#pragma once

#include "oldoind/canonical.hpp"
#include "oldoind/cotree.hpp"
#include "oldoind/decide.hpp"
#include "oldoind/families.hpp"
#include "oldoind/graph.hpp"
#include "oldoind/graph6.hpp"
#include "oldoind/p4tidy.hpp"
#include "oldoind/prism.hpp"
#include "oldoind/solver.hpp"
#include "oldoind/spider.hpp"
#include "oldoind/verify.hpp"
#include "oldoind/x3c.hpp"
