#pragma once

#include <array>
#include <string>
#include <vector>

#include "palf/surface.hpp"

namespace palf {

// Exact rational points sharing one denominator.
struct Polyline3 {
    std::vector<std::array<long long, 3>> pts;
    long long denom = 1;
    // surface normal per vertex as (dy, dz) in units of half the push distance
    std::vector<std::array<int, 2>> normal;
};

// disk levels z_i = i/(p+1), y_j = j/(q+1); bands cross x = 0
Polyline3 realize(const BandCycle& c, const LyonSurface& s);
Polyline3 pushoff(const Polyline3& l);
Polyline3 reversed(const Polyline3& l);

int linking_number(const Polyline3& a, const Polyline3& b);
// the same number seen from each of the first `count` generic directions
std::vector<int> linking_numbers(const Polyline3& a, const Polyline3& b, std::size_t count = 3);

// lk(L, L+) for a curve on the surface
int surface_framing(const BandCycle& c, const LyonSurface& s);

std::string to_text(const Polyline3& l);

}  // namespace palf
