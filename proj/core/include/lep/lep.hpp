#pragma once

// Umbrella header for the liouville-ep core library.

#include "lep/closed_system.hpp"
#include "lep/cubic.hpp"
#include "lep/dynamics.hpp"
#include "lep/ep_locator.hpp"
#include "lep/liouvillian.hpp"
#include "lep/model_core.hpp"
#include "lep/spectrum.hpp"
#include "lep/sweep.hpp"
