#pragma once

#include "afi/canonical.hpp"
#include "afi/census.hpp"
#include "afi/construct.hpp"
#include "afi/core.hpp"
#include "afi/equivalence.hpp"
#include "afi/feasibility.hpp"
#include "afi/serialize.hpp"
#include "afi/text_format.hpp"
#include "afi/verify.hpp"
