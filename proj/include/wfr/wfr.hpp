#pragma once

#include "wfr/baselines.hpp"
#include "wfr/bytes.hpp"
#include "wfr/engine.hpp"
#include "wfr/errors.hpp"
#include "wfr/factor_filter.hpp"
#include "wfr/harness.hpp"
#include "wfr/report.hpp"
