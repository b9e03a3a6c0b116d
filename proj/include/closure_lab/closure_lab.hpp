#pragma once

/// Umbrella header.

#include "closure_lab/coeffs.hpp"
#include "closure_lab/detectors.hpp"
#include "closure_lab/toric.hpp"
