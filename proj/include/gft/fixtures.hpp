#pragma once

#include "gft/series.hpp"

// Closed-form test functions expanded as truncated power series.
namespace gft::fixtures {

/// z/(1+cz), a Moebius map with zero Schwarzian and a_2 = -c.
PowerSeries moebius(Complex c, int order = kDefaultOrder);

/// (exp(i*pi*z) - 1)/(i*pi); its Schwarzian is the constant pi^2/2.
PowerSeries nehari(int order = kDefaultOrder);

/// Koebe function z/(1-z)^2 = sum k z^k.
PowerSeries koebe(int order = kDefaultOrder);

/// z + a2 z^2.
PowerSeries quadratic(Complex a2, int order = kDefaultOrder);

}  // namespace gft::fixtures
