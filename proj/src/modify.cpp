#include <algorithm>

#include "palf/error.hpp"
#include "palf/front.hpp"

namespace palf {

namespace {

struct Emitter {
    std::vector<Event>& out;
    std::vector<std::string> rows;

    void lcusp(int r, const std::string& label) {
        out.push_back({Event::Kind::LeftCusp, r, label, 0});
        rows.insert(rows.begin() + r, 2, label);
    }
    void rcusp(int r) {
        out.push_back({Event::Kind::RightCusp, r, "", 0});
        rows.erase(rows.begin() + r, rows.begin() + r + 2);
    }
    void cross(int r) {
        out.push_back({Event::Kind::Cross, r, "", 0});
        std::swap(rows[r], rows[r + 1]);
    }
    void emit(const Event& e) {
        switch (e.kind) {
            case Event::Kind::LeftCusp: lcusp(e.row, e.label); break;
            case Event::Kind::RightCusp: rcusp(e.row); break;
            case Event::Kind::Cross: cross(e.row); break;
        }
        out.back().line = e.line;
    }
};

}  // namespace

FrontDiagram modify_for_handles(const FrontDiagram& d) {
    if (d.modified) return d;
    FrontDiagram out = d;
    out.modified = true;
    out.handles.clear();
    if (d.handles.empty()) return out;

    std::size_t first_rcusp = d.events.size();
    for (std::size_t c = 0; c < d.events.size(); ++c)
        if (d.events[c].kind == Event::Kind::RightCusp) {
            first_rcusp = c;
            break;
        }
    auto handles = d.handles;
    std::stable_sort(handles.begin(), handles.end(),
                     [](const HandleDecl& a, const HandleDecl& b) { return a.column < b.column; });
    for (const auto& h : handles)
        if (h.column > first_rcusp)
            throw Error(ErrorKind::Handle, "handle " + h.id + " is not in standard form (declared after a right cusp)",
                        h.line);

    out.events.clear();
    Emitter em{out.events, {}};
    std::size_t next = 0;
    std::size_t k = 0;
    while (true) {
        while (next < handles.size() && handles[next].column == k) {
            const auto& h = handles[next++];
            int s = h.strands();
            int lo = h.lo;
            int top = lo + s;

            // dotted unknot hugging the bundle from above
            em.lcusp(top, h.id);
            for (int r = top - 1; r >= lo; --r) em.cross(r);
            for (int r = lo; r < top; ++r) em.cross(r);
            em.rcusp(top);

            // inverse of (s1 s2 ... s_{s-1})^s, left to right
            std::vector<int> letters;
            for (int rep = 0; rep < s; ++rep)
                for (int g = s - 1; g >= 1; --g) letters.push_back(lo + g - 1);
            TwistRecord rec{h.id, s, static_cast<int>(letters.size()), 0, 0};

            // free reduction against the crossings that follow the handle
            bool blocked = next < handles.size() && handles[next].column == k;
            while (!blocked && !letters.empty() && k < d.events.size() &&
                   d.events[k].kind == Event::Kind::Cross && d.events[k].row == letters.back()) {
                letters.pop_back();
                ++rec.cancelled;
                ++k;
                blocked = next < handles.size() && handles[next].column == k;
            }
            for (int r : letters) {
                std::string label = em.rows[r + 1];
                em.lcusp(r, label);
                em.cross(r + 1);
                em.rcusp(r + 2);
                ++rec.zigzags;
            }
            out.twists.push_back(rec);
            out.dotted.push_back(h.id);
            out.components.push_back(h.id);
        }
        if (k >= d.events.size()) break;
        em.emit(d.events[k]);
        ++k;
    }
    trace_front(out);
    return out;
}

}  // namespace palf
