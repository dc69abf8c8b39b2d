#pragma once

#include "fusionkit/error.hpp"
#include "fusionkit/datum.hpp"
#include "fusionkit/combination.hpp"
#include "fusionkit/semiring.hpp"
#include "fusionkit/finite_group.hpp"
#include "fusionkit/ring.hpp"
#include "fusionkit/grading.hpp"
#include "fusionkit/saturation.hpp"
#include "fusionkit/cocenter.hpp"
#include "fusionkit/normality.hpp"
#include "fusionkit/expression.hpp"
#include "fusionkit/io.hpp"
