#pragma once

// Umbrella header.

#include "ririg/algebra.hpp"
#include "ririg/compatible.hpp"
#include "ririg/enumeration.hpp"
#include "ririg/errors.hpp"
#include "ririg/filters.hpp"
#include "ririg/io.hpp"
#include "ririg/logic.hpp"
#include "ririg/modal.hpp"
#include "ririg/parallel.hpp"
#include "ririg/subset.hpp"
#include "ririg/term.hpp"
#include "ririg/varieties.hpp"
