#pragma once

#include "edgelab/canon.hpp"
#include "edgelab/certify.hpp"
#include "edgelab/enumerate.hpp"
#include "edgelab/errors.hpp"
#include "edgelab/extremal.hpp"
#include "edgelab/gallai_edmonds.hpp"
#include "edgelab/graph.hpp"
#include "edgelab/graph6.hpp"
#include "edgelab/matching.hpp"
#include "edgelab/np_exact.hpp"
#include "edgelab/rational.hpp"
