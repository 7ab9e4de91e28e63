#pragma once

#include "stagger/audit.hpp"
#include "stagger/errors.hpp"
#include "stagger/field_io.hpp"
#include "stagger/grid.hpp"
#include "stagger/nd_apply.hpp"
#include "stagger/oracle.hpp"
#include "stagger/scalar.hpp"
