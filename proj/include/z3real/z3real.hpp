#pragma once

#include "z3real/builder.hpp"
#include "z3real/catalog.hpp"
#include "z3real/enumerate.hpp"
#include "z3real/graph.hpp"
#include "z3real/reducer.hpp"
#include "z3real/report.hpp"
#include "z3real/sequence.hpp"
#include "z3real/sweep.hpp"
#include "z3real/verifier.hpp"
