#pragma once

#include "approx.hpp"
#include "errors.hpp"
#include "fractional.hpp"
#include "harness.hpp"
#include "io.hpp"
#include "k_functional.hpp"
#include "kernels.hpp"
#include "majorant.hpp"
#include "norms.hpp"
#include "psi.hpp"
#include "random_families.hpp"
#include "smoothness.hpp"
#include "space.hpp"
#include "spectral_function.hpp"
#include "spectral_ops.hpp"
#include "suite.hpp"
#include "verdict.hpp"
