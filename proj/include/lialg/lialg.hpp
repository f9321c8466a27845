// Umbrella header.
#pragma once

#include "lialg/algebra.hpp"
#include "lialg/catalog.hpp"
#include "lialg/complex.hpp"
#include "lialg/criteria.hpp"
#include "lialg/extension.hpp"
#include "lialg/invariant.hpp"
#include "lialg/parse.hpp"
#include "lialg/rational.hpp"
#include "lialg/sparse.hpp"
#include "lialg/weight.hpp"
