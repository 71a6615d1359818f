#pragma once

#include "bergman/sampling.hpp"

namespace bergman::testing {
using namespace bergman::sampling;
}  // namespace bergman::testing
