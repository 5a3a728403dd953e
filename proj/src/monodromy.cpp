#include "palf/monodromy.hpp"

#include <numeric>
#include <sstream>

#include "palf/error.hpp"

namespace palf {

std::string Provenance::describe() const {
    if (torus) return "torus(" + std::to_string(i) + "," + std::to_string(j) + ")";
    return "handle " + label;
}

TwistWord torus_vanishing_cycles(const LyonSurface& s) {
    TwistWord w;
    for (int j = 1; j < s.q(); ++j)
        for (int i = 1; i < s.p(); ++i) w.entries.push_back({square_cycle(i, j), {true, i, j, ""}});
    return w;
}

IntMatrix twist_matrix(const BandCycle& c, const HomologyData& h) {
    // x -> x + <x,c> c
    IntVector g = h.coords(c);
    IntVector jg = palf::apply(h.pairing, g);
    IntMatrix t = identity(h.rank);
    for (int r = 0; r < h.rank; ++r) {
        if (g[r] == 0) continue;
        for (int s = 0; s < h.rank; ++s) t[r][s] += g[r] * jg[s];
    }
    return t;
}

IntMatrix word_matrix(const TwistWord& w, const HomologyData& h) {
    IntMatrix m = identity(h.rank);
    for (const auto& e : w.entries) m = multiply(twist_matrix(e.cycle, h), m);
    return m;
}

bool preserves_pairing(const IntMatrix& m, const IntMatrix& j) {
    return multiply(transpose(m), multiply(j, m)) == j;
}

namespace {

Poly mul(const Poly& a, const Poly& b) {
    Poly c(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) c[i + k] += a[i] * b[k];
    return c;
}

Poly t_power_minus_one(int n) {
    Poly f(n + 1, BigInt(0));
    f[0] = -1;
    f[n] = 1;
    return f;
}

}  // namespace

Poly alexander_torus(int p, int q) {
    if (p < 2 || q < 2) throw Error(ErrorKind::Argument, "alexander_torus needs p, q >= 2");
    if (std::gcd(p, q) != 1)
        throw Error(ErrorKind::Argument,
                    "alexander_torus needs coprime p, q (gcd(" + std::to_string(p) + "," + std::to_string(q) + ") = " +
                        std::to_string(std::gcd(p, q)) + ")");
    Poly num = mul(t_power_minus_one(p * q), t_power_minus_one(1));
    Poly den = mul(t_power_minus_one(p), t_power_minus_one(q));
    // long division by a monic divisor
    Poly quot(num.size() - den.size() + 1, BigInt(0));
    for (std::size_t d = quot.size(); d-- > 0;) {
        BigInt c = num[d + den.size() - 1];
        quot[d] = c;
        for (std::size_t k = 0; k < den.size(); ++k) num[d + k] -= c * den[k];
    }
    for (const auto& r : num)
        if (r != 0) throw Error(ErrorKind::Range, "torus Alexander division left a remainder");
    return quot;
}

bool equal_up_to_unit(const Poly& a, const Poly& b) {
    auto norm = [](Poly f) {
        trim(f);
        std::size_t lo = 0;
        while (lo < f.size() && f[lo] == 0) ++lo;
        return Poly(f.begin() + static_cast<long>(lo), f.end());
    };
    Poly x = norm(a), y = norm(b);
    if (x.size() != y.size()) return false;
    bool same = true, opposite = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) same = false;
        if (x[i] != -y[i]) opposite = false;
    }
    return same || opposite;
}

std::string to_string(const Poly& f) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = f.size(); d-- > 0;) {
        const BigInt& c = f[d];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (mag != 1 || d == 0) os << mag;
        if (d >= 1) os << "t";
        if (d >= 2) os << "^" << d;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace palf
