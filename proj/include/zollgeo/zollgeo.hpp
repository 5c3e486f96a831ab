#pragma once

#include "zollgeo/config.hpp"
#include "zollgeo/darboux.hpp"
#include "zollgeo/errors.hpp"
#include "zollgeo/geodesics.hpp"
#include "zollgeo/intersections.hpp"
#include "zollgeo/metric.hpp"
#include "zollgeo/output.hpp"
#include "zollgeo/quadrature.hpp"
#include "zollgeo/returnmap.hpp"
#include "zollgeo/svg.hpp"
