#pragma once

// Umbrella header for the functional time series regression library.

#include "ftsreg/errors.hpp"
#include "ftsreg/estimator.hpp"
#include "ftsreg/experiments.hpp"
#include "ftsreg/filter.hpp"
#include "ftsreg/grid.hpp"
#include "ftsreg/kernels.hpp"
#include "ftsreg/operators.hpp"
#include "ftsreg/parallel.hpp"
#include "ftsreg/schedule.hpp"
#include "ftsreg/serialize.hpp"
#include "ftsreg/series.hpp"
#include "ftsreg/simulate.hpp"
#include "ftsreg/spectral.hpp"
