#pragma once

#include "lgbound/correlators.hpp"
#include "lgbound/eigensystems.hpp"
#include "lgbound/lg.hpp"
#include "lgbound/overlaps.hpp"
#include "lgbound/parity.hpp"
#include "lgbound/quadrature.hpp"
#include "lgbound/region.hpp"
#include "lgbound/scans.hpp"
