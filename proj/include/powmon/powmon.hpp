#ifndef POWMON_POWMON_HPP
#define POWMON_POWMON_HPP

#include "cones.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "power_monoid.hpp"
#include "verify.hpp"

#endif // POWMON_POWMON_HPP
