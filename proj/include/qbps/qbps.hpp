#pragma once

#include "qbps/acceptance.hpp"
#include "qbps/bps_dim.hpp"
#include "qbps/errors.hpp"
#include "qbps/io.hpp"
#include "qbps/magic_count.hpp"
#include "qbps/oracle.hpp"
#include "qbps/partitions.hpp"
#include "qbps/quiver.hpp"
#include "qbps/rational.hpp"
#include "qbps/report.hpp"
#include "qbps/simplex.hpp"
#include "qbps/weights.hpp"
#include "qbps/zonotope.hpp"
