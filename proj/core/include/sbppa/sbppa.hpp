#pragma once

#include "sbppa/constraints.hpp"
#include "sbppa/experiment.hpp"
#include "sbppa/export.hpp"
#include "sbppa/optimizer.hpp"
#include "sbppa/problems.hpp"
#include "sbppa/reference.hpp"
#include "sbppa/statistics.hpp"
#include "sbppa/stochastic.hpp"
