#pragma once

#include "algebra.hpp"
#include "algebra_io.hpp"
#include "decomposition.hpp"
#include "dirichlet.hpp"
#include "families.hpp"
#include "genus.hpp"
#include "ideal_oracle.hpp"
