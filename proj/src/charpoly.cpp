#include <cmath>

#include "palf/error.hpp"
#include "palf/matrix.hpp"

namespace palf {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Range, "integer overflow in matrix product");
    return r;
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Range, "integer overflow in matrix product");
    return r;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 reduce(long long x, u64 m) {
    long long r = x % static_cast<long long>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<long long>(m) : r);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % a == 0) return n == a;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s && comp; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) comp = false;
        }
        if (comp) return false;
    }
    return true;
}

const std::vector<u64>& primes() {
    static const std::vector<u64> ps = [] {
        std::vector<u64> v;
        for (u64 c = (1ULL << 62) - 1; v.size() < 64; c -= 2)
            if (is_prime(c)) v.push_back(c);
        return v;
    }();
    return ps;
}

std::vector<u64> charpoly_mod(const IntMatrix& a, u64 m) {
    const std::size_t n = a.size();
    std::vector<std::vector<u64>> h(n, std::vector<u64>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) h[r][c] = reduce(a[r][c], m);

    // similarity to upper Hessenberg form
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && h[piv][j] == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            std::swap(h[piv], h[j + 1]);
            for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
        }
        u64 inv = powmod(h[j + 1][j], m - 2, m);
        for (std::size_t r = j + 2; r < n; ++r) {
            if (h[r][j] == 0) continue;
            u64 u = mulmod(h[r][j], inv, m);
            for (std::size_t c = 0; c < n; ++c) h[r][c] = (h[r][c] + m - mulmod(u, h[j + 1][c], m)) % m;
            for (std::size_t c = 0; c < n; ++c) h[c][j + 1] = (h[c][j + 1] + mulmod(u, h[c][r], m)) % m;
        }
    }

    // p_k = (t - h_kk) p_{k-1} - sum_i h_ik (prod sub-diagonal) p_{i-1}
    std::vector<std::vector<u64>> p(n + 1);
    p[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<u64> cur(k + 1, 0);
        const auto& prev = p[k - 1];
        for (std::size_t d = 0; d < prev.size(); ++d) {
            cur[d + 1] = (cur[d + 1] + prev[d]) % m;
            cur[d] = (cur[d] + m - mulmod(h[k - 1][k - 1], prev[d], m)) % m;
        }
        u64 prod = 1;
        for (std::size_t i = k - 1; i >= 1; --i) {
            prod = mulmod(prod, h[i][i - 1], m);
            if (prod == 0) break;
            u64 coef = mulmod(h[i - 1][k - 1], prod, m);
            for (std::size_t d = 0; d < p[i - 1].size(); ++d)
                cur[d] = (cur[d] + m - mulmod(coef, p[i - 1][d], m)) % m;
        }
        p[k] = std::move(cur);
    }
    return p[n];
}

}  // namespace

IntMatrix identity(std::size_t n) {
    IntMatrix m(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    IntMatrix c(n, IntVector(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (b[t][j] != 0) c[i][j] = checked_add(c[i][j], checked_mul(a[i][t], b[t][j]));
        }
    return c;
}

IntVector apply(const IntMatrix& a, const IntVector& x) {
    IntVector y(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) y[i] = dot(a[i], x);
    return y;
}

IntMatrix transpose(const IntMatrix& a) {
    if (a.empty()) return {};
    IntMatrix t(a[0].size(), IntVector(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

long long dot(const IntVector& a, const IntVector& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

std::size_t rank_mod(const IntMatrix& a, std::uint64_t m) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::vector<std::vector<u64>> w(rows, std::vector<u64>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) w[r][c] = reduce(a[r][c], m);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && w[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(w[piv], w[rank]);
        u64 inv = powmod(w[rank][c], m - 2, m);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (w[r][c] == 0) continue;
            u64 u = mulmod(w[r][c], inv, m);
            for (std::size_t k = c; k < cols; ++k) w[r][k] = (w[r][k] + m - mulmod(u, w[rank][k], m)) % m;
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_exact(const IntMatrix& a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::vector<std::vector<BigInt>> w(rows, std::vector<BigInt>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) w[r][c] = a[r][c];
    // fraction-free elimination
    BigInt prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && w[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(w[piv], w[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) w[r][k] = (w[rank][c] * w[r][k] - w[r][c] * w[rank][k]) / prev;
            w[r][c] = 0;
        }
        prev = w[rank][c];
        ++rank;
    }
    return rank;
}

Poly charpoly(const IntMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return {BigInt(1)};
    // |c_k| <= C(n,k) R^k <= (1 + R)^n with R the largest row norm
    double r2 = 0;
    for (const auto& row : a) {
        double s = 0;
        for (long long x : row) s += static_cast<double>(x) * static_cast<double>(x);
        r2 = std::max(r2, s);
    }
    double bits = static_cast<double>(n) * std::log2(1.0 + std::sqrt(r2)) + 4;
    std::size_t count = static_cast<std::size_t>(std::ceil(bits / 61.0)) + 1;
    if (count > primes().size()) throw Error(ErrorKind::Range, "characteristic polynomial coefficients too large");

    Poly x(n + 1, BigInt(0));
    BigInt modulus = 1;
    for (std::size_t t = 0; t < count; ++t) {
        u64 m = primes()[t];
        auto r = charpoly_mod(a, m);
        BigInt bm = m;
        BigInt inv = powmod(static_cast<u64>(modulus % bm), m - 2, m);
        for (std::size_t d = 0; d <= n; ++d) {
            BigInt diff = (BigInt(r[d]) - x[d] % bm) % bm;
            if (diff < 0) diff += bm;
            x[d] += modulus * ((diff * inv) % bm);
        }
        modulus *= bm;
    }
    BigInt half = modulus / 2;
    for (auto& c : x)
        if (c > half) c -= modulus;
    return x;
}

BigInt evaluate(const Poly& f, long long t) {
    BigInt acc = 0;
    for (std::size_t d = f.size(); d-- > 0;) acc = acc * t + f[d];
    return acc;
}

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

}  // namespace palf
