#pragma once

#include "legsym/catalog.hpp"
#include "legsym/decomposition.hpp"
#include "legsym/group_checks.hpp"
#include "legsym/group_forms.hpp"
#include "legsym/json_io.hpp"
#include "legsym/legendrian.hpp"
#include "legsym/lie_algebra.hpp"
#include "legsym/linalg.hpp"
#include "legsym/matrix_exp.hpp"
#include "legsym/numeric.hpp"
#include "legsym/report.hpp"
#include "legsym/symmetric_pair.hpp"
