#pragma once

#include "asmkit/bigint.hpp"
#include "asmkit/core.hpp"
#include "asmkit/enumerate.hpp"
#include "asmkit/error.hpp"
#include "asmkit/fpl.hpp"
#include "asmkit/grid.hpp"
#include "asmkit/half.hpp"
#include "asmkit/hankel.hpp"
#include "asmkit/lattice.hpp"
#include "asmkit/laurent.hpp"
#include "asmkit/parallel.hpp"
#include "asmkit/recurrence.hpp"
#include "asmkit/sample.hpp"
#include "asmkit/serialize.hpp"
#include "asmkit/symmetry.hpp"
