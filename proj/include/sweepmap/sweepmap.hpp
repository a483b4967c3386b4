#pragma once

#include "sweepmap/combinatorics.hpp"
#include "sweepmap/core.hpp"
#include "sweepmap/errors.hpp"
#include "sweepmap/incomplete.hpp"
#include "sweepmap/invert.hpp"
#include "sweepmap/io.hpp"
#include "sweepmap/render.hpp"
#include "sweepmap/schedule.hpp"
#include "sweepmap/sweep.hpp"
