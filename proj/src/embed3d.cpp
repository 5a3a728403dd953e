#include "palf/embed3d.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "palf/error.hpp"

namespace palf {

namespace {

using i128 = __int128;
using Vec = std::array<long long, 3>;

// denominators: eps = 1/10, delta = 1/100, runs at x = +-1/2
constexpr long long kEps = 10;
constexpr long long kDelta = 100;

// projection schedule: 2D coordinates (u.P, w.P), height (u x w).P
const std::array<std::pair<Vec, Vec>, 8> kDirections{{
    {{1, 3, 7}, {-2, 5, 1}},
    {{4, -1, 3}, {1, 6, -2}},
    {{2, 7, -3}, {5, -1, 4}},
    {{7, 2, 5}, {-3, 4, 1}},
    {{1, -4, 9}, {6, 1, -1}},
    {{5, 3, -2}, {2, -7, 3}},
    {{3, -2, 8}, {-1, 5, 6}},
    {{9, 1, 4}, {2, -3, 7}},
}};

Vec cross3(const Vec& a, const Vec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

long long dot3(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

int sgn(i128 x) { return (x > 0) - (x < 0); }

Polyline3 rescale(const Polyline3& l, long long denom) {
    Polyline3 out = l;
    long long f = denom / l.denom;
    for (auto& p : out.pts)
        for (auto& c : p) c *= f;
    out.denom = denom;
    return out;
}

struct Projected {
    long long u, w, h;
};

// signed crossing sum from one direction, or nothing if the projection is not generic
std::optional<long long> crossing_sum(const Polyline3& a, const Polyline3& b, std::size_t dir) {
    const auto& [u, w] = kDirections[dir];
    const Vec n = cross3(u, w);
    auto proj = [&](const Polyline3& l) {
        std::vector<Projected> out;
        for (const auto& p : l.pts) out.push_back({dot3(u, p), dot3(w, p), dot3(n, p)});
        return out;
    };
    auto pa = proj(a), pb = proj(b);
    long long total = 0;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        const auto& a0 = pa[i];
        const auto& a1 = pa[(i + 1) % pa.size()];
        i128 rx = a1.u - a0.u, ry = a1.w - a0.w;
        for (std::size_t k = 0; k < pb.size(); ++k) {
            const auto& b0 = pb[k];
            const auto& b1 = pb[(k + 1) % pb.size()];
            i128 sx = b1.u - b0.u, sy = b1.w - b0.w;
            i128 qx = b0.u - a0.u, qy = b0.w - a0.w;
            i128 den = rx * sy - ry * sx;
            i128 tn = qx * sy - qy * sx;
            i128 un = qx * ry - qy * rx;
            if (den == 0) {
                if (tn != 0 || un != 0) continue;  // parallel, apart
                // collinear: overlapping spans are degenerate
                i128 rr = rx * rx + ry * ry;
                i128 t0 = qx * rx + qy * ry;
                i128 t1 = (b1.u - a0.u) * rx + (b1.w - a0.w) * ry;
                if (!((t0 < 0 && t1 < 0) || (t0 > rr && t1 > rr))) return std::nullopt;
                continue;
            }
            int orient = sgn(den);
            if (den < 0) {
                den = -den;
                tn = -tn;
                un = -un;
            }
            if (tn < 0 || tn > den || un < 0 || un > den) continue;
            if (tn == 0 || tn == den || un == 0 || un == den) return std::nullopt;
            i128 ha = static_cast<i128>(a0.h) * den + tn * (a1.h - a0.h);
            i128 hb = static_cast<i128>(b0.h) * den + un * (b1.h - b0.h);
            if (ha == hb) return std::nullopt;
            total += orient * (ha > hb ? 1 : -1);
        }
    }
    return total;
}

}  // namespace

Polyline3 realize(const BandCycle& c, const LyonSurface& s) {
    const long long d = 200LL * (s.p() + 1) * (s.q() + 1);
    auto z = [&](int i) { return i * d / (s.p() + 1); };
    auto y = [&](int j) { return j * d / (s.q() + 1); };
    const long long eps = d / kEps;
    const auto corners = corners_of(c);
    const std::size_t n = corners.size();
    Polyline3 l;
    l.denom = d;
    for (std::size_t k = 0; k < n; ++k) {
        const auto& a = corners[k];
        const auto& b = corners[(k + 1) % n];
        if (a.i < 1 || a.i > s.p() || a.j < 1 || a.j > s.q()) throw Error(ErrorKind::Range, "curve leaves the surface");
        const bool onto_d = a.i == b.i;
        // band from the E side (x = -eps) to the D side (x = +eps)
        std::array<std::pair<long long, std::array<int, 2>>, 3> band{{{-eps, {-2, 0}}, {0, {-1, 1}}, {eps, {0, 2}}}};
        if (!onto_d) std::swap(band[0], band[2]);
        for (const auto& [x, nrm] : band) {
            l.pts.push_back({x, y(a.j), z(a.i)});
            l.normal.push_back(nrm);
        }
        if (onto_d) {
            l.pts.push_back({d / 2, y(a.j), z(a.i)});
            l.pts.push_back({d / 2, y(b.j), z(a.i)});
            l.normal.push_back({0, 2});
            l.normal.push_back({0, 2});
        } else {
            l.pts.push_back({-d / 2, y(a.j), z(a.i)});
            l.pts.push_back({-d / 2, y(a.j), z(b.i)});
            l.normal.push_back({-2, 0});
            l.normal.push_back({-2, 0});
        }
    }
    return l;
}

Polyline3 pushoff(const Polyline3& l) {
    Polyline3 out = l;
    const long long half = l.denom / (2 * kDelta);
    if (half * 2 * kDelta != l.denom) throw Error(ErrorKind::Range, "polyline denominator does not resolve the push distance");
    for (std::size_t k = 0; k < out.pts.size(); ++k) {
        out.pts[k][1] += half * l.normal[k][0];
        out.pts[k][2] += half * l.normal[k][1];
    }
    return out;
}

Polyline3 reversed(const Polyline3& l) {
    Polyline3 out = l;
    std::reverse(out.pts.begin(), out.pts.end());
    std::reverse(out.normal.begin(), out.normal.end());
    return out;
}

std::vector<int> linking_numbers(const Polyline3& a0, const Polyline3& b0, std::size_t count) {
    long long denom = std::lcm(a0.denom, b0.denom);
    Polyline3 a = rescale(a0, denom), b = rescale(b0, denom);
    std::vector<int> out;
    for (std::size_t dir = 0; dir < kDirections.size() && out.size() < count; ++dir) {
        auto s = crossing_sum(a, b, dir);
        if (!s) continue;
        if (*s % 2 != 0) throw Error(ErrorKind::Range, "odd crossing sum between closed curves");
        out.push_back(static_cast<int>(*s / 2));
    }
    if (out.size() < count) throw Error(ErrorKind::Range, "no generic projection found; curves may intersect");
    return out;
}

int linking_number(const Polyline3& a, const Polyline3& b) {
    auto v = linking_numbers(a, b, 3);
    for (int x : v)
        if (x != v[0]) throw Error(ErrorKind::Range, "linking number depends on projection");
    return v[0];
}

int surface_framing(const BandCycle& c, const LyonSurface& s) {
    auto l = realize(c, s);
    return linking_number(l, pushoff(l));
}

std::string to_text(const Polyline3& l) {
    std::ostringstream os;
    for (const auto& p : l.pts) os << p[0] << "/" << l.denom << " " << p[1] << "/" << l.denom << " " << p[2] << "/" << l.denom << "\n";
    return os.str();
}

}  // namespace palf
