#pragma once

// Umbrella header: exact transcendental-lattice constructions for K3
// surfaces with real multiplication, and the invariants of the associated
// Kuga-Satake varieties.

#define K3RM_VERSION "0.1.0"

#include "k3rm/errors.hpp"
#include "k3rm/rational.hpp"
#include "k3rm/polynomial.hpp"
#include "k3rm/linalg.hpp"
#include "k3rm/number_field.hpp"
#include "k3rm/quadratic_form.hpp"
#include "k3rm/corestriction.hpp"
#include "k3rm/quaternion.hpp"
#include "k3rm/clifford.hpp"
#include "k3rm/characters.hpp"
#include "k3rm/dictionary.hpp"
