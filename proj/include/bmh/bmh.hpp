// SPDX-License-Identifier: Apache-2.0
//! \file bmh/bmh.hpp
//! Everything at once.
#pragma once

#include "bodies.hpp"
#include "common.hpp"
#include "endomorphism.hpp"
#include "halfspace.hpp"
#include "harmonics.hpp"
#include "homomorphism.hpp"
#include "hull.hpp"
#include "inequalities.hpp"
#include "io.hpp"
#include "legendre.hpp"
#include "measure.hpp"
#include "minkowski.hpp"
#include "polytope.hpp"
#include "predicates.hpp"
#include "quadrature.hpp"
#include "random.hpp"
#include "report.hpp"
#include "smooth.hpp"
#include "suites.hpp"
#include "zonal.hpp"
