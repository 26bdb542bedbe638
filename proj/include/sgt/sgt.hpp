#pragma once

// Umbrella header.

#include "sgt/bignat.hpp"
#include "sgt/classify.hpp"
#include "sgt/kernel.hpp"
#include "sgt/oracle.hpp"
#include "sgt/report.hpp"
#include "sgt/sequences.hpp"
