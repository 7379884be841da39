#pragma once

#include "zetalab/bounds.hpp"
#include "zetalab/core.hpp"
#include "zetalab/io.hpp"
#include "zetalab/numerics.hpp"
#include "zetalab/processes.hpp"
#include "zetalab/programs.hpp"
#include "zetalab/random.hpp"
#include "zetalab/samplers.hpp"
#include "zetalab/summation.hpp"
#include "zetalab/toymachine.hpp"
