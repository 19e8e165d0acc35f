#pragma once

// Umbrella header: pulls in the whole public surface.

#include "fepstat/accuracy.hpp"
#include "fepstat/datasets.hpp"
#include "fepstat/dist.hpp"
#include "fepstat/errors.hpp"
#include "fepstat/interval.hpp"
#include "fepstat/mc.hpp"
#include "fepstat/moments.hpp"
#include "fepstat/normality.hpp"
#include "fepstat/onesample.hpp"
#include "fepstat/rcompat.hpp"
#include "fepstat/report.hpp"
#include "fepstat/rng.hpp"
#include "fepstat/sample_io.hpp"
#include "fepstat/specfun.hpp"
#include "fepstat/twosample.hpp"
