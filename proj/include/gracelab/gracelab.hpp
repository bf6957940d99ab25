#pragma once

#include "gracelab/error.hpp"
#include "gracelab/rational.hpp"
#include "gracelab/tree.hpp"
#include "gracelab/layout.hpp"
#include "gracelab/metrics.hpp"
#include "gracelab/labeling.hpp"
#include "gracelab/rrg.hpp"
#include "gracelab/erg.hpp"
#include "gracelab/shell.hpp"
#include "gracelab/oracle.hpp"
#include "gracelab/stardust.hpp"
#include "gracelab/io.hpp"
