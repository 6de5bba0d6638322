#pragma once
// Convenience umbrella for the whole library.

#include "rieszpack/asymptotics.hpp"
#include "rieszpack/cantor.hpp"
#include "rieszpack/constants.hpp"
#include "rieszpack/energy.hpp"
#include "rieszpack/equidist.hpp"
#include "rieszpack/geometry.hpp"
#include "rieszpack/minkowski.hpp"
#include "rieszpack/neighborhood.hpp"
#include "rieszpack/packing.hpp"
#include "rieszpack/rational.hpp"
#include "rieszpack/report_io.hpp"
