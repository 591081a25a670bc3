#pragma once

#include "orbikit/diamond.hpp"
#include "orbikit/error.hpp"
#include "orbikit/grade.hpp"
#include "orbikit/inertia.hpp"
#include "orbikit/invariants.hpp"
#include "orbikit/quotient.hpp"
