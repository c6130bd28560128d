#pragma once

#include "jetspec/calculus.hpp"
#include "jetspec/errors.hpp"
#include "jetspec/holo_function.hpp"
#include "jetspec/jets.hpp"
#include "jetspec/jordan.hpp"
#include "jetspec/matrix.hpp"
#include "jetspec/moebius.hpp"
#include "jetspec/polynomial.hpp"
#include "jetspec/scalar.hpp"
#include "jetspec/series.hpp"
#include "jetspec/specmap.hpp"
