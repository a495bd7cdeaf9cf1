#pragma once

#include "booklie/charts.hpp"
#include "booklie/classify.hpp"
#include "booklie/dynamics.hpp"
#include "booklie/hopf.hpp"
#include "booklie/numeric_bracket.hpp"
#include "booklie/params_json.hpp"
#include "booklie/poisson.hpp"
#include "booklie/poly.hpp"
#include "booklie/poly_matrix.hpp"
#include "booklie/qalgebra.hpp"
#include "booklie/rational.hpp"
#include "booklie/rational_function.hpp"
#include "booklie/rmatrix.hpp"
#include "booklie/variable.hpp"
