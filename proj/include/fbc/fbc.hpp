#pragma once

#include "fbc/linalg.hpp"
#include "fbc/logistic.hpp"
#include "fbc/estimation.hpp"
#include "fbc/iterate.hpp"
#include "fbc/harness/artifact.hpp"
#include "fbc/harness/experiment.hpp"
