#pragma once

// Everything except the command-line front end (depthforge/cli.hpp).

#include "depthforge/constructions.hpp"
#include "depthforge/decomposition.hpp"
#include "depthforge/error.hpp"
#include "depthforge/export.hpp"
#include "depthforge/grid.hpp"
#include "depthforge/hilbert.hpp"
#include "depthforge/homology.hpp"
#include "depthforge/linear_algebra.hpp"
#include "depthforge/monomial.hpp"
#include "depthforge/parallel.hpp"
#include "depthforge/parse.hpp"
#include "depthforge/random.hpp"
#include "depthforge/report.hpp"
#include "depthforge/simplicial.hpp"
