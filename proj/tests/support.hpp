#pragma once

#include "toporing/module.hpp"

namespace toporing::testing {

using toporing::random_module;

}  // namespace toporing::testing
