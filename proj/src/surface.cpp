#include <algorithm>
#include <map>

#include "palf/error.hpp"
#include "palf/surface.hpp"

namespace palf {

BandCycle band_cycle(const std::vector<Corner>& corners) {
    BandCycle c;
    const std::size_t n = corners.size();
    std::set<std::pair<int, int>> used;
    for (std::size_t k = 0; k < n; ++k) {
        const auto& prev = corners[(k + n - 1) % n];
        const auto& x = corners[k];
        if (!used.insert({x.i, x.j}).second)
            throw Error(ErrorKind::Range, "band (" + std::to_string(x.i) + "," + std::to_string(x.j) + ") visited twice");
        // arriving along a horizontal run means we come off D_i
        c.visits.push_back({x.i, x.j, prev.i == x.i});
    }
    return c;
}

BandCycle square_cycle(int i, int j) {
    return {{{i, j, true}, {i + 1, j, false}, {i + 1, j + 1, true}, {i, j + 1, false}}};
}

std::vector<Corner> corners_of(const BandCycle& c) {
    std::vector<Corner> out;
    for (const auto& v : c.visits) out.push_back({v.j, v.i});
    return out;
}

LyonSurface::LyonSurface(int p, int q) : p_(p), q_(q) {
    if (p < 2 || q < 2)
        throw Error(ErrorKind::Argument, "surface needs p, q >= 2 (got " + std::to_string(p) + "," + std::to_string(q) + ")");
}

std::vector<std::vector<Dart>> LyonSurface::rotation() const {
    std::vector<std::vector<Dart>> rot(p_ + q_);
    for (int i = 1; i <= p_; ++i)
        for (int j = q_; j >= 1; --j) rot[d_vertex(i)].push_back({band_edge(i, j), 0});
    for (int j = 1; j <= q_; ++j)
        for (int i = 1; i <= p_; ++i) rot[e_vertex(j)].push_back({band_edge(i, j), 1});
    for (std::size_t t = 0; t < punctures_.size(); ++t) {
        const auto& pu = punctures_[t];
        auto& r = rot[pu.on_d ? d_vertex(pu.index) : e_vertex(pu.index)];
        int foot = pu.slot / 2, seen = -1;
        std::size_t pos = 0;
        for (; pos < r.size(); ++pos)
            if (r[pos].edge < p_ * q_ && ++seen == foot) break;
        int e = p_ * q_ + static_cast<int>(t);
        r.insert(r.begin() + pos, {Dart{e, 0}, Dart{e, 1}});
    }
    return rot;
}

namespace {

// next[d] is the dart after d around its disk; darts are numbered 2*edge + end
std::vector<int> rotation_successor(const LyonSurface& s) {
    std::vector<int> next(2 * s.edge_count());
    for (const auto& r : s.rotation())
        for (std::size_t k = 0; k < r.size(); ++k) {
            const auto& a = r[k];
            const auto& b = r[(k + 1) % r.size()];
            next[2 * a.edge + a.end] = 2 * b.edge + b.end;
        }
    return next;
}

}  // namespace

int LyonSurface::boundary_count() const { return static_cast<int>(boundary_classes().size()); }

std::vector<IntVector> LyonSurface::boundary_classes() const {
    auto next = rotation_successor(*this);
    std::vector<char> seen(next.size(), 0);
    std::vector<IntVector> out;
    for (std::size_t d0 = 0; d0 < next.size(); ++d0) {
        if (seen[d0]) continue;
        IntVector cls(edge_count(), 0);
        int d = static_cast<int>(d0);
        while (!seen[d]) {
            seen[d] = 1;
            cls[d / 2] += (d % 2 == 0) ? 1 : -1;
            d = next[d ^ 1];
        }
        out.push_back(std::move(cls));
    }
    return out;
}

LyonSurface LyonSurface::punctured(const Puncture& pu) const {
    int bound = pu.on_d ? p_ : q_;
    int feet = pu.on_d ? q_ : p_;
    std::string where = std::string(pu.on_d ? "D" : "E") + std::to_string(pu.index);
    if (pu.index < 1 || pu.index > bound) throw Error(ErrorKind::Range, "no disk " + where);
    if (pu.slot < 0 || pu.slot >= 2 * feet)
        throw Error(ErrorKind::Range, "slot " + std::to_string(pu.slot) + " outside disk " + where);
    if (pu.slot % 2 == 1) {
        int foot = pu.slot / 2;
        int i = pu.on_d ? pu.index : foot + 1;
        int j = pu.on_d ? q_ - foot : pu.index;
        std::string band = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        if (registered_.count({i, j}))
            throw Error(ErrorKind::Range, "slot on " + where + " collides with a registered curve at band " + band);
        throw Error(ErrorKind::Range, "slot on " + where + " lies on the foot of band " + band);
    }
    LyonSurface out = *this;
    out.punctures_.push_back(pu);
    return out;
}

LyonSurface LyonSurface::registered(const BandCycle& c) const {
    LyonSurface out = *this;
    for (const auto& v : c.visits) {
        if (v.i < 1 || v.i > p_ || v.j < 1 || v.j > q_) throw Error(ErrorKind::Range, "curve leaves the surface");
        out.registered_.insert({v.i, v.j});
    }
    return out;
}

LyonSurface build_lyon(int p, int q, int k) {
    if (k < 0) throw Error(ErrorKind::Argument, "negative puncture count");
    LyonSurface s(p, q);
    for (int t = 0; t < k; ++t) s = s.punctured({true, 1, 0});
    return s;
}

IntVector edge_vector(const BandCycle& c, const LyonSurface& s) {
    IntVector v(s.edge_count(), 0);
    for (const auto& x : c.visits) {
        if (x.i < 1 || x.i > s.p() || x.j < 1 || x.j > s.q())
            throw Error(ErrorKind::Range, "band (" + std::to_string(x.i) + "," + std::to_string(x.j) + ") not on a " +
                                              std::to_string(s.p()) + "x" + std::to_string(s.q()) + " surface");
        v[s.band_edge(x.i, x.j)] += x.d_to_e ? 1 : -1;
    }
    return v;
}

long long pairing(const LyonSurface& s, const IntVector& a, const IntVector& b) {
    long long tot = 0;
    for (const auto& r : s.rotation()) {
        long long pa = 0, pb = 0;
        for (const auto& d : r) {
            long long sg = d.end == 0 ? 1 : -1;
            long long fa = a[d.edge] * sg, fb = b[d.edge] * sg;
            tot += fb * pa - fa * pb;
            pa += fa;
            pb += fb;
        }
    }
    if (tot % 2 != 0) throw Error(ErrorKind::Range, "odd pairing sum: inputs are not cycles");
    return tot / 2;
}

IntVector HomologyData::coords(const IntVector& edge_vec) const {
    IntVector x(rank);
    for (int g = 0; g < rank; ++g) x[g] = edge_vec[generators[g]];
    return x;
}

IntVector HomologyData::coords(const BandCycle& c) const { return coords(edge_vector(c, surface)); }

int HomologyData::radical_rank() const {
    if (rank == 0) return 0;
    const std::uint64_t prime = (1ULL << 61) - 1;
    std::size_t r = rank_mod(pairing, prime);
    // boundary classes lie in the radical; if they fill the gap the modular rank is exact
    IntMatrix w;
    bool in_kernel = true;
    for (const auto& b : surface.boundary_classes()) {
        auto x = coords(b);
        for (long long y : palf::apply(pairing, x))
            if (y != 0) in_kernel = false;
        w.push_back(std::move(x));
    }
    if (in_kernel && r + rank_mod(w, prime) == static_cast<std::size_t>(rank)) return rank - static_cast<int>(r);
    return rank - static_cast<int>(rank_exact(pairing));
}

HomologyData homology(const LyonSurface& s) {
    HomologyData h{s, 0, {}, {}, {}};
    const int p = s.p(), q = s.q();
    // spanning tree: all bands touching D_1 or E_1
    for (int j = 2; j <= q; ++j)
        for (int i = 2; i <= p; ++i) {
            IntVector v(s.edge_count(), 0);
            v[s.band_edge(i, j)] = 1;
            v[s.band_edge(1, j)] = -1;
            v[s.band_edge(1, 1)] = 1;
            v[s.band_edge(i, 1)] = -1;
            h.generators.push_back(s.band_edge(i, j));
            h.basis.push_back(std::move(v));
        }
    for (int t = 0; t < s.k(); ++t) {
        IntVector v(s.edge_count(), 0);
        v[p * q + t] = 1;
        h.generators.push_back(p * q + t);
        h.basis.push_back(std::move(v));
    }
    h.rank = static_cast<int>(h.basis.size());
    h.pairing.assign(h.rank, IntVector(h.rank, 0));

    // sparse assembly: only classes meeting a disk contribute there
    struct Flow {
        int cls;
        int pos;
        long long f;
    };
    auto rot = s.rotation();
    std::vector<std::vector<std::pair<int, int>>> where(s.edge_count());  // edge -> (vertex, position) per end
    for (std::size_t v = 0; v < rot.size(); ++v)
        for (std::size_t k = 0; k < rot[v].size(); ++k) {
            const auto& d = rot[v][k];
            auto& w = where[d.edge];
            if (w.size() < 2) w.resize(2);
            w[d.end] = {static_cast<int>(v), static_cast<int>(k)};
        }
    std::vector<std::vector<Flow>> at(rot.size());
    for (int c = 0; c < h.rank; ++c)
        for (int e = 0; e < s.edge_count(); ++e) {
            long long coef = h.basis[c][e];
            if (coef == 0) continue;
            at[where[e][0].first].push_back({c, where[e][0].second, coef});
            at[where[e][1].first].push_back({c, where[e][1].second, -coef});
        }
    IntMatrix twice(h.rank, IntVector(h.rank, 0));
    for (auto& fl : at) {
        std::map<int, std::vector<Flow>> by;
        for (const auto& f : fl) by[f.cls].push_back(f);
        for (auto x = by.begin(); x != by.end(); ++x)
            for (auto y = std::next(x); y != by.end(); ++y) {
                long long c = 0;
                for (const auto& a : x->second)
                    for (const auto& b : y->second) c += a.f * b.f * ((b.pos > a.pos) - (b.pos < a.pos));
                twice[x->first][y->first] += c;
                twice[y->first][x->first] -= c;
            }
    }
    for (int a = 0; a < h.rank; ++a)
        for (int b = 0; b < h.rank; ++b) {
            if (twice[a][b] % 2 != 0) throw Error(ErrorKind::Range, "pairing assembly produced an odd entry");
            h.pairing[a][b] = twice[a][b] / 2;
        }
    return h;
}

bool is_nonseparating(const BandCycle& c, const HomologyData& h) {
    auto x = h.coords(c);
    for (long long v : palf::apply(h.pairing, x))
        if (v % 2 != 0) return true;
    return false;
}

BandCycle embed_component(const GridDiagram& g, const std::string& label, const LyonSurface& s) {
    const auto& comp = g.component(label);
    for (const auto& c : comp.corners)
        if (c.i < 1 || c.i > s.p() || c.j < 1 || c.j > s.q())
            throw Error(ErrorKind::Range, "corner (" + std::to_string(c.j) + "," + std::to_string(c.i) + ") of " +
                                              label + " outside the " + std::to_string(s.p()) + "x" +
                                              std::to_string(s.q()) + " surface");
    return band_cycle(comp.corners);
}

}  // namespace palf
