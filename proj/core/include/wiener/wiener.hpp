#pragma once

#include "wiener/audit.hpp"
#include "wiener/bounds.hpp"
#include "wiener/checked.hpp"
#include "wiener/degree_sequence.hpp"
#include "wiener/errors.hpp"
#include "wiener/reports.hpp"
#include "wiener/solvers.hpp"
#include "wiener/spine_weights.hpp"
#include "wiener/tree.hpp"
