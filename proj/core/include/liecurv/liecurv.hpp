#pragma once

#include "liecurv/algebra.hpp"
#include "liecurv/backend.hpp"
#include "liecurv/builtins.hpp"
#include "liecurv/config.hpp"
#include "liecurv/curvature.hpp"
#include "liecurv/errors.hpp"
#include "liecurv/format.hpp"
#include "liecurv/geodesic.hpp"
#include "liecurv/rng.hpp"
#include "liecurv/sampling.hpp"
#include "liecurv/semidirect.hpp"
#include "liecurv/torus.hpp"
#include "liecurv/trig.hpp"
