#pragma once

#include "brio/brio_solver.hpp"
#include "brio/errors.hpp"
#include "brio/fv_lab.hpp"
#include "brio/io.hpp"
#include "brio/kernel.hpp"
#include "brio/limit_models.hpp"
#include "brio/limits_lab.hpp"
#include "brio/solution.hpp"
#include "brio/types.hpp"
#include "brio/weak_verify.hpp"
