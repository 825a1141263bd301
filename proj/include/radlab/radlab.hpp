#pragma once

// Umbrella header for the radius-lab library.

#include "radlab/bounds.hpp"
#include "radlab/complex_matrix.hpp"
#include "radlab/ensemble.hpp"
#include "radlab/errors.hpp"
#include "radlab/hermitian_eigen.hpp"
#include "radlab/matrix_functions.hpp"
#include "radlab/matrix_io.hpp"
#include "radlab/num_format.hpp"
#include "radlab/radii.hpp"
#include "radlab/rng.hpp"
#include "radlab/tolerance.hpp"
#include "radlab/verify.hpp"
