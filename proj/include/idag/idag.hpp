#pragma once

#include "idag/canonical.hpp"
#include "idag/decomposition.hpp"
#include "idag/equivalence.hpp"
#include "idag/error.hpp"
#include "idag/expression.hpp"
#include "idag/graph.hpp"
#include "idag/loops.hpp"
#include "idag/matrix.hpp"
#include "idag/models.hpp"
#include "idag/quotient.hpp"
#include "idag/random.hpp"
#include "idag/serialize.hpp"
#include "idag/weights.hpp"
