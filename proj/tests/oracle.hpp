#pragma once
// Test-side reference computations. Nothing here calls into the library's
// algorithms; inputs come in as plain integers and coordinates.

#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using PolyL = std::vector<long long>;  // constant term first

inline PolyL poly_mul(const PolyL& a, const PolyL& b) {
    PolyL c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) c[i + k] += a[i] * b[k];
    return c;
}

// exact division by a monic polynomial
inline PolyL poly_div(PolyL num, const PolyL& den) {
    PolyL q(num.size() - den.size() + 1, 0);
    for (std::size_t d = q.size(); d-- > 0;) {
        long long c = num[d + den.size() - 1];
        q[d] = c;
        for (std::size_t k = 0; k < den.size(); ++k) num[d + k] -= c * den[k];
    }
    return q;
}

inline PolyL cyclotomic(int n) {
    PolyL f(n + 1, 0);
    f[0] = -1;
    f[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) f = poly_div(f, cyclotomic(d));
    return f;
}

// torus knot Alexander polynomial as the product of Phi_d over d | pq with d not dividing p or q
inline PolyL alexander(int p, int q) {
    PolyL f{1};
    for (int d = 1; d <= p * q; ++d)
        if ((p * q) % d == 0 && p % d != 0 && q % d != 0) f = poly_mul(f, cyclotomic(d));
    return f;
}

// first Betti number of the fiber as a connected graph: E - V + 1
inline int betti(int p, int q, int k) { return p * q + k - (p + q) + 1; }

inline int euler(int p, int q, int k) { return p + q - p * q - k; }

inline int boundary(int p, int q, int k) { return std::gcd(p, q) + k; }

inline int genus(int p, int q, int k) { return (2 - euler(p, q, k) - boundary(p, q, k)) / 2; }

// rank of a small integer matrix through floating point full pivoting
inline int rank_double(const std::vector<std::vector<long long>>& m) {
    if (m.empty()) return 0;
    Eigen::MatrixXd a(m.size(), m[0].size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m[r].size(); ++c) a(r, c) = static_cast<double>(m[r][c]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    lu.setThreshold(1e-9);
    return static_cast<int>(lu.rank());
}

// Bareiss fraction-free determinant
inline Big det(const std::vector<std::vector<long long>>& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Big>> a(n, std::vector<Big>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] = m[r][c];
    Big prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            for (std::size_t c = k + 1; c < n; ++c) a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
            a[r][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline std::uint64_t mod_pos(long long v, std::uint64_t p) {
    long long r = v % static_cast<long long>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(p) : r);
}

inline std::uint64_t pw(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// det(tI - M) mod a prime below 2^31, by elimination
inline std::uint64_t charpoly_at(const std::vector<std::vector<long long>>& m, long long t, std::uint64_t p) {
    const std::size_t n = m.size();
    std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] = mod_pos((r == c ? t : 0) - m[r][c], p);
    std::uint64_t d = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            d = (p - d) % p;
        }
        d = d * a[k][k] % p;
        std::uint64_t inv = pw(a[k][k], p - 2, p);
        for (std::size_t r = k + 1; r < n; ++r) {
            std::uint64_t f = a[r][k] * inv % p;
            if (!f) continue;
            for (std::size_t c = k; c < n; ++c) a[r][c] = (a[r][c] + (p - f) * a[k][c]) % p;
        }
    }
    return d;
}

inline std::uint64_t poly_at(const PolyL& f, long long t, std::uint64_t p) {
    std::uint64_t r = 0, tp = mod_pos(t, p);
    for (std::size_t d = f.size(); d-- > 0;) r = (r * tp + mod_pos(f[d], p)) % p;
    return r;
}

using P3 = std::array<double, 3>;

inline P3 sub(const P3& a, const P3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline P3 cross(const P3& a, const P3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double dotp(const P3& a, const P3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline P3 unit(const P3& a) {
    double n = std::sqrt(dotp(a, a));
    return {a[0] / n, a[1] / n, a[2] / n};
}

// Gauss linking integral of two closed polylines, summed exactly per segment
// pair with the solid-angle formula
inline double gauss_linking(const std::vector<P3>& a, const std::vector<P3>& b) {
    double total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const P3& p1 = a[i];
        const P3& p2 = a[(i + 1) % a.size()];
        for (std::size_t k = 0; k < b.size(); ++k) {
            const P3& p3 = b[k];
            const P3& p4 = b[(k + 1) % b.size()];
            P3 r13 = sub(p3, p1), r14 = sub(p4, p1), r23 = sub(p3, p2), r24 = sub(p4, p2);
            P3 c1 = cross(r13, r14), c2 = cross(r14, r24), c3 = cross(r24, r23), c4 = cross(r23, r13);
            if (dotp(c1, c1) < 1e-30 || dotp(c2, c2) < 1e-30 || dotp(c3, c3) < 1e-30 || dotp(c4, c4) < 1e-30) continue;
            P3 n1 = unit(c1), n2 = unit(c2), n3 = unit(c3), n4 = unit(c4);
            auto as = [](double x) { return std::asin(std::max(-1.0, std::min(1.0, x))); };
            double om = as(dotp(n1, n2)) + as(dotp(n2, n3)) + as(dotp(n3, n4)) + as(dotp(n4, n1));
            double s = dotp(cross(sub(p4, p3), sub(p2, p1)), r13);
            total += s > 0 ? om : (s < 0 ? -om : 0);
        }
    }
    return total / (4 * M_PI);
}

// minimum distance between two closed polylines, sampled finely along segments
inline double min_distance(const std::vector<P3>& a, const std::vector<P3>& b) {
    auto seg_dist = [](const P3& p, const P3& q, const P3& r, const P3& s) {
        double best = 1e100;
        const int steps = 40;
        for (int u = 0; u <= steps; ++u) {
            double tu = static_cast<double>(u) / steps;
            P3 x{p[0] + tu * (q[0] - p[0]), p[1] + tu * (q[1] - p[1]), p[2] + tu * (q[2] - p[2])};
            // closest point on segment rs
            P3 d = sub(s, r);
            double dd = dotp(d, d);
            double tv = dd > 0 ? std::max(0.0, std::min(1.0, dotp(sub(x, r), d) / dd)) : 0;
            P3 y{r[0] + tv * d[0], r[1] + tv * d[1], r[2] + tv * d[2]};
            P3 e = sub(x, y);
            best = std::min(best, std::sqrt(dotp(e, e)));
        }
        return best;
    };
    double best = 1e100;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            best = std::min(best, seg_dist(a[i], a[(i + 1) % a.size()], b[k], b[(k + 1) % b.size()]));
    return best;
}

}  // namespace oracle
