#pragma once

// Umbrella header: eigenvalue localization in reduced Gershgorin disks and
// rank certificates from shifted diagonal dominance.

#include "gersh/certificate.hpp"
#include "gersh/disk.hpp"
#include "gersh/geometry.hpp"
#include "gersh/gershgorin.hpp"
#include "gersh/matrix.hpp"
#include "gersh/median.hpp"
#include "gersh/oracle.hpp"
#include "gersh/reduced.hpp"
#include "gersh/shifted.hpp"
#include "gersh/structured.hpp"
#include "gersh/weiszfeld.hpp"
