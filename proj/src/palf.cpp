#include "palf/palf.hpp"

#include <set>
#include <sstream>

#include "palf/embed3d.hpp"
#include "palf/error.hpp"

namespace palf {

bool AuditReport::ok() const {
    for (const auto& i : items)
        if (!i.pass) return false;
    return true;
}

std::string AuditReport::to_text() const {
    std::ostringstream os;
    for (const auto& i : items) os << (i.pass ? "PASS " : "FAIL ") << i.name << ": " << i.detail << "\n";
    return os.str();
}

Puncture puncture_slot(const GridComponent& c, const LyonSurface& s) {
    const auto& a = c.corners.at(0);
    const auto& b = c.corners.at(1);
    if (a.i == b.i) return {true, a.i, 2 * (s.q() - a.j)};
    return {false, a.j, 2 * (a.i - 1)};
}

Palf build_palf(const FrontDiagram& d, int min_p, int min_q) {
    FrontDiagram md = modify_for_handles(d);
    GridDiagram raw = to_square_bridge(md);
    GridDiagram g = pad_coprime(raw, min_p, min_q);

    Palf x;
    x.raw_grid = {raw.p, raw.q};
    LyonSurface s(g.p, g.q);
    std::vector<std::pair<std::string, BandCycle>> curves;
    for (const auto& label : md.two_handles()) {
        auto c = embed_component(g, label, s);
        s = s.registered(c);
        curves.emplace_back(label, std::move(c));
    }
    for (const auto& label : md.dotted) {
        s = s.punctured(puncture_slot(g.component(label), s));
        x.dotted.push_back(label);
    }

    x.fiber = s;
    x.cycles = torus_vanishing_cycles(s);
    for (const auto& [label, c] : curves) {
        x.cycles.entries.push_back({c, {false, 0, 0, label}});
        int tb = thurston_bennequin(md, label);
        x.ledger.push_back({label, tb, surface_framing(c, s), tb - 1});
    }
    x.header = {g.p, g.q, s.k(), static_cast<int>(curves.size()), static_cast<int>(x.cycles.size()),
                s.genus(), s.boundary_count()};

    auto report = verify(x);
    if (!report.ok()) throw Error(ErrorKind::Audit, "audit failed:\n" + report.to_text());
    return x;
}

namespace {

std::string num(long long v) { return std::to_string(v); }

bool valid_curve(const BandCycle& c, const LyonSurface& s, std::string& why) {
    const auto& v = c.visits;
    if (v.size() < 4 || v.size() % 2) {
        why = "needs an even number of at least 4 bands";
        return false;
    }
    std::set<std::pair<int, int>> seen;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const auto& a = v[k];
        const auto& b = v[(k + 1) % v.size()];
        if (a.i < 1 || a.i > s.p() || a.j < 1 || a.j > s.q()) {
            why = "band outside the surface";
            return false;
        }
        if (!seen.insert({a.i, a.j}).second) {
            why = "band visited twice";
            return false;
        }
        // leaving along D_i means the next band shares i
        bool leaves_d = !a.d_to_e;
        if (leaves_d ? (a.i != b.i || a.j == b.j) : (a.j != b.j || a.i == b.i) || b.d_to_e == a.d_to_e) {
            why = "consecutive bands do not share the right disk";
            return false;
        }
    }
    return true;
}

}  // namespace

AuditReport verify(const Palf& x) {
    AuditReport r;
    const auto& h = x.header;
    const auto& s = x.fiber;
    const int chi = s.euler_characteristic();
    const int bnd = s.boundary_count();
    const int genus = s.genus();
    const int torus = (s.p() - 1) * (s.q() - 1);

    r.items.push_back({"fiber",
                       h.p == s.p() && h.q == s.q() && h.k == s.k() && h.genus == genus && h.boundary == bnd &&
                           2 * genus == 2 - chi - bnd,
                       "(p,q) = (" + num(s.p()) + "," + num(s.q()) + "), chi(fiber) = " + num(chi) + ", genus " +
                           num(genus) + ", boundary " + num(bnd) + ", punctures " + num(s.k())});

    int handle_cycles = 0;
    for (const auto& e : x.cycles.entries)
        if (!e.provenance.torus) ++handle_cycles;
    r.items.push_back({"cycle count",
                       h.m == static_cast<int>(x.cycles.size()) && h.m == torus + h.n && handle_cycles == h.n,
                       "m = " + num(h.m) + ", listed " + num(x.cycles.size()) + ", (p-1)(q-1) + n = " + num(torus) +
                           " + " + num(h.n) + " = " + num(torus + h.n)});

    r.items.push_back({"euler characteristic", chi + h.m == 1 - h.k + h.n,
                       "chi(fiber) + m = " + num(chi) + " + " + num(h.m) + " = " + num(chi + h.m) +
                           ", 1 - k + n = " + num(1 - h.k + h.n)});

    bool prefix = static_cast<int>(x.cycles.size()) >= torus;
    auto expected = torus_vanishing_cycles(s);
    for (int t = 0; prefix && t < torus; ++t) prefix = x.cycles.entries[t] == expected.entries[t];
    r.items.push_back({"torus prefix", prefix, num(torus) + " square cycles, column-major"});

    bool shapes = true;
    std::string why;
    for (std::size_t t = 0; t < x.cycles.size() && shapes; ++t)
        if (!valid_curve(x.cycles.entries[t].cycle, s, why)) {
            shapes = false;
            why = "cycle " + num(t + 1) + ": " + why;
        }
    r.items.push_back({"embedded cycles", shapes, shapes ? "all cycles are closed band paths" : why});

    if (shapes) {
        auto hom = homology(s);
        std::vector<std::string> bad;
        for (std::size_t t = 0; t < x.cycles.size(); ++t)
            if (!is_nonseparating(x.cycles.entries[t].cycle, hom))
                bad.push_back(x.cycles.entries[t].provenance.describe());
        std::string detail = bad.empty() ? "all " + num(x.cycles.size()) + " cycles nonseparating" : "separating:";
        for (const auto& b : bad) detail += " " + b;
        r.items.push_back({"allowability", bad.empty(), detail});
    } else {
        r.items.push_back({"allowability", false, "skipped: malformed cycles"});
    }

    bool framing = static_cast<int>(x.ledger.size()) == h.n;
    std::string fdetail;
    std::size_t li = 0;
    for (const auto& e : x.cycles.entries) {
        if (e.provenance.torus) continue;
        if (li >= x.ledger.size()) {
            framing = false;
            break;
        }
        const auto& L = x.ledger[li++];
        int lk = shapes ? surface_framing(e.cycle, s) : L.surface_framing + 1;
        bool ok = L.label == e.provenance.label && L.surface_framing == L.tb && lk == L.surface_framing &&
                  L.attached_framing == L.tb - 1;
        framing = framing && ok;
        if (!fdetail.empty()) fdetail += "; ";
        fdetail += L.label + ": tb " + num(L.tb) + ", lk(L,L+) " + num(lk) + ", attached " + num(L.attached_framing);
    }
    if (fdetail.empty()) fdetail = "no 2-handles";
    r.items.push_back({"framing", framing, fdetail});

    r.items.push_back({"puncture placement", true,
                       num(s.k()) + " puncture(s) at the fixed slot rule; equivalence across placements is not checked"});
    return r;
}

Family family(const FrontDiagram& d, const std::vector<std::pair<int, int>>& sizes) {
    if (sizes.empty()) throw Error(ErrorKind::Argument, "family needs at least one size");
    for (std::size_t t = 1; t < sizes.size(); ++t)
        if (!(sizes[t - 1] < sizes[t]))
            throw Error(ErrorKind::Argument, "sizes must be strictly increasing: (" + num(sizes[t - 1].first) + "," +
                                                 num(sizes[t - 1].second) + ") then (" + num(sizes[t].first) + "," +
                                                 num(sizes[t].second) + ")");
    Family f;
    for (const auto& [p, q] : sizes) {
        f.members.push_back(build_palf(d, p, q));
        f.genera.push_back(f.members.back().header.genus);
    }
    f.certified = true;
    for (std::size_t a = 0; a < f.genera.size(); ++a)
        for (std::size_t b = a + 1; b < f.genera.size(); ++b)
            if (f.genera[a] == f.genera[b]) f.certified = false;
    return f;
}

}  // namespace palf
