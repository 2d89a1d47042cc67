// monact - finite monoids, right acts, and their covers
//
// Umbrella header.

#ifndef MONACT_MONACT_HPP_
#define MONACT_MONACT_HPP_

#include "act.hpp"
#include "colimit.hpp"
#include "congruence.hpp"
#include "covers.hpp"
#include "error.hpp"
#include "flatness.hpp"
#include "io.hpp"
#include "kruml.hpp"
#include "monoid.hpp"
#include "morphisms.hpp"
#include "presentation.hpp"
#include "scenarios.hpp"

#endif  // MONACT_MONACT_HPP_
