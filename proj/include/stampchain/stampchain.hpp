#pragma once

// Umbrella header: the whole library.

#include <stampchain/applications.hpp>
#include <stampchain/core.hpp>
#include <stampchain/engine.hpp>
#include <stampchain/matrix_entry.hpp>
#include <stampchain/plan.hpp>
#include <stampchain/plan_io.hpp>
#include <stampchain/search.hpp>
#include <stampchain/set_function.hpp>
#include <stampchain/tables.hpp>
#include <stampchain/transform.hpp>
