#pragma once

#include "raca/errors.hpp"
#include "raca/quadrature.hpp"
#include "raca/special_functions.hpp"
#include "raca/volumes.hpp"
#include "raca/polyhedron.hpp"
#include "raca/andreev.hpp"
#include "raca/canonical.hpp"
#include "raca/catalog.hpp"
#include "raca/census.hpp"
#include "raca/surd.hpp"
#include "raca/arithmeticity.hpp"
#include "raca/io.hpp"
