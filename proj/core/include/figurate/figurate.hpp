#pragma once

#include "figurate/exact.hpp"
#include "figurate/combinatorics.hpp"
#include "figurate/enumeration.hpp"
#include "figurate/coefficients.hpp"
#include "figurate/fermat.hpp"
#include "figurate/powersum.hpp"
