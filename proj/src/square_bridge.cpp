// Front to square bridge position.
//
// The front is swept left to right on a lattice. Every strand moves with
// slope +1 or -1 per step, so after the rotation h = x - z, v = x + z the
// slope -1 pieces become horizontal runs and the slope +1 pieces vertical
// runs. Left cusps turn into up-right corners and right cusps into
// down-left corners, and a front crossing becomes a horizontal strand
// passing over a vertical one.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <tuple>

#include "palf/error.hpp"
#include "palf/grid.hpp"

namespace palf {

namespace {

struct Pt {
    long x;
    long z;
    bool operator==(const Pt&) const = default;
};

struct Strand {
    long z = 0;
    int d = 0;
    int id = 0;
    bool lock = false;
    std::vector<Pt> path;
    std::string label;
};

struct Join {
    bool left;
    int a;
    int b;
};

struct Sweep {
    std::vector<Strand> done;
    std::vector<Join> joins;
};

Sweep sweep(const std::vector<Event>& ev) {
    std::vector<Strand> s;
    Sweep out;
    long t = 0;
    int pid = 0;
    std::size_t k = 0;
    long guard = 0;
    const long max_steps = 1000000;

    auto move_all = [&] {
        for (auto& x : s) {
            x.z += x.d;
            x.path.push_back({t + 1, x.z});
        }
    };

    while (k < ev.size() || !s.empty()) {
        if (k >= ev.size()) throw Error(ErrorKind::Unclosed, "sweep ran out of events with open strands");
        if (++guard > max_steps) throw Error(ErrorKind::Range, "sweep did not terminate");
        const Event& e = ev[k];
        const int n = static_cast<int>(s.size());
        const int r = e.row;
        const bool is_lcusp = e.kind == Event::Kind::LeftCusp;
        std::optional<std::pair<int, int>> evp;
        std::set<int> locked;
        for (int i = 0; i < n; ++i)
            if (s[i].lock) locked.insert(i);
        std::set<int> fixed = locked;

        if (!is_lcusp) {
            if (!locked.count(r) && !locked.count(r + 1)) {
                s[r].d = 1;
                s[r + 1].d = -1;
                evp = {r, r + 1};
                fixed.insert(r);
                fixed.insert(r + 1);
            }
        } else if (r > 0 && r < n && !locked.count(r - 1) && !locked.count(r)) {
            long lo = s[r - 1].z + s[r - 1].d, hi = s[r].z + s[r].d;
            if (hi - lo < 6) {
                s[r - 1].d = -1;
                s[r].d = 1;
                fixed.insert(r - 1);
                fixed.insert(r);
            }
        }

        // flipping a strand downward cascades through a tight chain of rising strands below it
        auto blocked_down = [&](int i) {
            while (true) {
                if (fixed.count(i) && s[i].d == 1) return true;
                if (i == 0) return false;
                if (s[i - 1].d == 1 && s[i].z - s[i - 1].z <= 2)
                    --i;
                else
                    return false;
            }
        };
        auto blocked_up = [&](int i) {
            while (true) {
                if (fixed.count(i) && s[i].d == -1) return true;
                if (i == static_cast<int>(s.size()) - 1) return false;
                if (s[i + 1].d == -1 && s[i + 1].z - s[i].z <= 2)
                    ++i;
                else
                    return false;
            }
        };

        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i + 1 < n; ++i) {
                Strand& a = s[i];
                Strand& b = s[i + 1];
                if (evp && i == evp->first) continue;
                if (a.z == b.z) continue;
                if (a.d == 1 && b.d == -1 && b.z - a.z <= 2) {
                    bool bd = blocked_down(i), bu = blocked_up(i + 1);
                    if (bd && bu) throw Error(ErrorKind::Range, "sweep deadlock");
                    if (bd)
                        b.d = 1;
                    else if (bu)
                        a.d = -1;
                    else if (evp && i >= evp->second)
                        b.d = 1;
                    else if (evp && i + 1 <= evp->first)
                        a.d = -1;
                    else if (is_lcusp && i + 1 <= r - 1)
                        a.d = -1;
                    else
                        b.d = 1;
                    changed = true;
                }
            }
        }
        for (auto& x : s) x.lock = false;

        // a pair that just crossed, or a busy neighbour of a new cusp, needs one more step
        if ((!is_lcusp && !evp) || (is_lcusp && (locked.count(r - 1) || locked.count(r)))) {
            move_all();
            ++t;
            continue;
        }

        bool fired = false;
        long zs = 0;
        if (!is_lcusp) {
            fired = s[r + 1].z - s[r].z == 2;
        } else {
            std::optional<long> lo, hi;
            if (r - 1 >= 0) lo = s[r - 1].z + s[r - 1].d;
            if (r < n) hi = s[r].z + s[r].d;
            if (!lo && !hi) {
                zs = t % 2;
                fired = true;
            } else if (!lo) {
                zs = *hi - 3;
                fired = true;
            } else if (!hi) {
                zs = *lo + 3;
                fired = true;
            } else if (*hi - *lo >= 6) {
                zs = *lo + 3 + 2 * ((*hi - *lo - 6) / 4);
                fired = true;
            }
        }

        move_all();
        if (fired) {
            if (e.kind == Event::Kind::Cross) {
                std::swap(s[r], s[r + 1]);
                s[r].lock = s[r + 1].lock = true;
            } else if (e.kind == Event::Kind::RightCusp) {
                if (s[r].z != s[r + 1].z) throw Error(ErrorKind::Range, "right cusp strands did not meet");
                out.joins.push_back({false, s[r].id, s[r + 1].id});
                out.done.push_back(std::move(s[r]));
                out.done.push_back(std::move(s[r + 1]));
                s.erase(s.begin() + r, s.begin() + r + 2);
            } else {
                Strand a{zs - 1, -1, pid, false, {{t, zs}, {t + 1, zs - 1}}, e.label};
                Strand b{zs + 1, 1, pid + 1, false, {{t, zs}, {t + 1, zs + 1}}, e.label};
                out.joins.push_back({true, pid, pid + 1});
                pid += 2;
                s.insert(s.begin() + r, {std::move(a), std::move(b)});
            }
            ++k;
        }
        ++t;
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            if (!(s[i].z < s[i + 1].z || (s[i].lock && s[i + 1].lock)))
                throw Error(ErrorKind::Range, "sweep lost strand order");
    }
    return out;
}

}  // namespace

GridDiagram to_square_bridge(const FrontDiagram& d) {
    if (!d.handles.empty() && !d.modified)
        throw Error(ErrorKind::Handle, "diagram has unspliced 1-handles; run modify_for_handles first");
    trace_front(d);
    Sweep sw = sweep(d.events);

    std::map<int, const Strand*> by_id;
    for (const auto& x : sw.done) by_id[x.id] = &x;
    std::map<int, int> left_partner, right_partner;
    for (const auto& j : sw.joins) {
        auto& m = j.left ? left_partner : right_partner;
        m[j.a] = j.b;
        m[j.b] = j.a;
    }

    struct Cycle {
        std::string label;
        std::vector<Pt> pts;
    };
    std::vector<Cycle> cycles;
    std::set<int> seen;
    for (const auto& j : sw.joins) {
        if (!j.left || seen.count(j.a)) continue;
        Cycle c{by_id.at(j.a)->label, {}};
        int cur = j.a;
        bool fwd = true;
        while (true) {
            seen.insert(cur);
            const auto& path = by_id.at(cur)->path;
            if (fwd)
                c.pts.insert(c.pts.end(), path.begin(), path.end());
            else
                c.pts.insert(c.pts.end(), path.rbegin(), path.rend());
            int nxt = fwd ? right_partner.at(cur) : left_partner.at(cur);
            if (seen.count(nxt)) break;
            cur = nxt;
            fwd = !fwd;
        }
        cycles.push_back(std::move(c));
    }

    // corners in rotated coordinates (h, v)
    std::vector<std::pair<std::string, std::vector<std::pair<long, long>>>> comps;
    for (const auto& c : cycles) {
        std::vector<Pt> pts;
        for (const auto& p : c.pts)
            if (pts.empty() || !(pts.back() == p)) pts.push_back(p);
        if (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();
        std::vector<std::pair<long, long>> cr;
        const std::size_t n = pts.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Pt& a = pts[(i + n - 1) % n];
            const Pt& b = pts[i];
            const Pt& e = pts[(i + 1) % n];
            long turn = (b.x - a.x) * (e.z - b.z) - (b.z - a.z) * (e.x - b.x);
            if (turn != 0) cr.push_back({b.x - b.z, b.x + b.z});
        }
        comps.push_back({c.label, cr});
    }

    // one level per segment; ties broken by the low end of the span
    using Key = std::tuple<long, long, std::size_t, std::size_t>;
    std::vector<Key> hs, vs;
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const auto& cr = comps[ci].second;
        for (std::size_t i = 0; i < cr.size(); ++i) {
            auto a = cr[i], b = cr[(i + 1) % cr.size()];
            if (a.second == b.second)
                hs.emplace_back(a.second, std::min(a.first, b.first), ci, i);
            else
                vs.emplace_back(a.first, std::min(a.second, b.second), ci, i);
        }
    }
    std::sort(hs.begin(), hs.end());
    std::sort(vs.begin(), vs.end());
    std::map<std::pair<std::size_t, std::size_t>, int> hl, vl;
    for (std::size_t k = 0; k < hs.size(); ++k) hl[{std::get<2>(hs[k]), std::get<3>(hs[k])}] = static_cast<int>(k) + 1;
    for (std::size_t k = 0; k < vs.size(); ++k) vl[{std::get<2>(vs[k]), std::get<3>(vs[k])}] = static_cast<int>(k) + 1;

    GridDiagram g;
    g.p = static_cast<int>(hs.size());
    g.q = static_cast<int>(vs.size());
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const auto& cr = comps[ci].second;
        const std::size_t n = cr.size();
        GridComponent gc;
        gc.label = comps[ci].first;
        gc.dotted = d.is_dotted(gc.label);
        for (std::size_t i = 0; i < n; ++i) {
            std::pair<std::size_t, std::size_t> s1{ci, (i + n - 1) % n}, s2{ci, i};
            int il = hl.count(s1) ? hl[s1] : hl.at(s2);
            int jl = vl.count(s1) ? vl[s1] : vl.at(s2);
            gc.corners.push_back({jl, il});
        }
        g.components.push_back(std::move(gc));
    }
    validate(g);
    return g;
}

}  // namespace palf
