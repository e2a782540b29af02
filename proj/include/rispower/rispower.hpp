// Umbrella header: pulls in the whole library.

#pragma once

#include "rispower/analysis.hpp"
#include "rispower/catalog.hpp"
#include "rispower/descriptor.hpp"
#include "rispower/dynamic_power.hpp"
#include "rispower/errors.hpp"
#include "rispower/quantities.hpp"
#include "rispower/report.hpp"
#include "rispower/serialization.hpp"
#include "rispower/static_power.hpp"
