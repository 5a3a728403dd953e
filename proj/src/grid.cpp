#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "palf/error.hpp"
#include "palf/grid.hpp"

namespace palf {

namespace {

bool is_horizontal(const Corner& a, const Corner& b) { return a.i == b.i; }

int sgn(int x) { return (x > 0) - (x < 0); }

}  // namespace

std::vector<Segment> GridDiagram::horizontals() const {
    std::vector<Segment> out;
    for (const auto& c : components)
        for (std::size_t k = 0; k < c.corners.size(); ++k) {
            const auto& a = c.corners[k];
            const auto& b = c.corners[(k + 1) % c.corners.size()];
            if (is_horizontal(a, b)) out.push_back({a.i, a.j, b.j, c.label});
        }
    std::sort(out.begin(), out.end(), [](const Segment& x, const Segment& y) { return x.level < y.level; });
    return out;
}

std::vector<Segment> GridDiagram::verticals() const {
    std::vector<Segment> out;
    for (const auto& c : components)
        for (std::size_t k = 0; k < c.corners.size(); ++k) {
            const auto& a = c.corners[k];
            const auto& b = c.corners[(k + 1) % c.corners.size()];
            if (!is_horizontal(a, b)) out.push_back({a.j, a.i, b.i, c.label});
        }
    std::sort(out.begin(), out.end(), [](const Segment& x, const Segment& y) { return x.level < y.level; });
    return out;
}

const GridComponent& GridDiagram::component(const std::string& label) const {
    for (const auto& c : components)
        if (c.label == label) return c;
    throw Error(ErrorKind::Argument, "unknown component " + label);
}

void validate(const GridDiagram& g) {
    std::set<int> hlev, vlev;
    std::set<Corner> seen;
    for (const auto& c : g.components) {
        const std::size_t n = c.corners.size();
        if (n < 4 || n % 2 != 0)
            throw Error(ErrorKind::Range, "component " + c.label + " has " + std::to_string(n) + " corners");
        for (std::size_t k = 0; k < n; ++k) {
            const auto& a = c.corners[k];
            const auto& b = c.corners[(k + 1) % n];
            const auto& z = c.corners[(k + n - 1) % n];
            if (a.i < 1 || a.i > g.p || a.j < 1 || a.j > g.q)
                throw Error(ErrorKind::Range, "corner (" + std::to_string(a.j) + "," + std::to_string(a.i) +
                                                  ") outside " + std::to_string(g.p) + "x" + std::to_string(g.q));
            if (!seen.insert(a).second) throw Error(ErrorKind::Range, "corner used twice");
            if ((a.i == b.i) == (a.j == b.j)) throw Error(ErrorKind::Range, "segment is not axis parallel");
            if (is_horizontal(a, b) == is_horizontal(z, a)) throw Error(ErrorKind::Range, "segments do not alternate");
            auto& lev = is_horizontal(a, b) ? hlev : vlev;
            if (!lev.insert(is_horizontal(a, b) ? a.i : a.j).second)
                throw Error(ErrorKind::Range, "two segments share a level");
        }
    }
}

std::pair<int, int> coprime_size(int p, int q, int min_p, int min_q) {
    int p0 = std::max({p, min_p, 2});
    int q0 = std::max({q, min_q, 2});
    for (int m = std::max(p0, q0);; ++m)
        for (int a = p0; a <= m; ++a)
            for (int b = q0; b <= m; ++b)
                if (std::max(a, b) == m && std::gcd(a, b) == 1) return {a, b};
}

GridDiagram pad_coprime(const GridDiagram& g, int min_p, int min_q) {
    GridDiagram out = g;
    std::tie(out.p, out.q) = coprime_size(g.p, g.q, min_p, min_q);
    return out;
}

int writhe_grid(const GridComponent& c) {
    const std::size_t n = c.corners.size();
    int w = 0;
    for (std::size_t a = 0; a < n; ++a) {
        const auto& h0 = c.corners[a];
        const auto& h1 = c.corners[(a + 1) % n];
        if (!is_horizontal(h0, h1)) continue;
        for (std::size_t b = 0; b < n; ++b) {
            const auto& v0 = c.corners[b];
            const auto& v1 = c.corners[(b + 1) % n];
            if (is_horizontal(v0, v1)) continue;
            int i = h0.i, j = v0.j;
            if (std::min(h0.j, h1.j) < j && j < std::max(h0.j, h1.j) && std::min(v0.i, v1.i) < i &&
                i < std::max(v0.i, v1.i))
                w += sgn(h1.j - h0.j) * sgn(v1.i - v0.i);
        }
    }
    return w;
}

int writhe_grid(const GridDiagram& g, const std::string& label) { return writhe_grid(g.component(label)); }

int up_right_corners(const GridComponent& c) {
    const std::size_t n = c.corners.size();
    int count = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const auto& x = c.corners[k];
        const auto& a = c.corners[(k + n - 1) % n];
        const auto& b = c.corners[(k + 1) % n];
        bool right = a.j > x.j || b.j > x.j;
        bool up = a.i > x.i || b.i > x.i;
        if (right && up) ++count;
    }
    return count;
}

std::string to_text(const GridDiagram& g) {
    std::ostringstream os;
    os << "grid " << g.p << " " << g.q << "\n";
    for (const auto& c : g.components) {
        if (c.dotted) os << "dotted " << c.label << "\n";
        for (std::size_t k = 0; k < c.corners.size(); ++k) {
            const auto& a = c.corners[k];
            const auto& b = c.corners[(k + 1) % c.corners.size()];
            if (is_horizontal(a, b))
                os << "h " << a.i << " " << a.j << " " << b.j << " " << c.label << "\n";
            else
                os << "v " << a.j << " " << a.i << " " << b.i << " " << c.label << "\n";
        }
    }
    return os.str();
}

GridDiagram parse_grid(std::string_view text) {
    GridDiagram g;
    std::istringstream is{std::string(text)};
    std::string line;
    int ln = 0;
    bool header = false;
    std::map<std::string, std::size_t> index;
    std::map<std::string, std::vector<Corner>> ends;
    auto comp = [&](const std::string& label) -> GridComponent& {
        auto it = index.find(label);
        if (it == index.end()) {
            index[label] = g.components.size();
            g.components.push_back({label, false, {}});
            return g.components.back();
        }
        return g.components[it->second];
    };
    while (std::getline(is, line)) {
        ++ln;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "grid") {
            if (!(ls >> g.p >> g.q)) throw Error(ErrorKind::Syntax, "expected 'grid p q'", ln);
            header = true;
        } else if (kw == "dotted") {
            std::string label;
            if (!(ls >> label)) throw Error(ErrorKind::Syntax, "expected a label", ln);
            comp(label).dotted = true;
        } else if (kw == "h" || kw == "v") {
            if (!header) throw Error(ErrorKind::Syntax, "segment before 'grid' header", ln);
            int level, a, b;
            std::string label;
            if (!(ls >> level >> a >> b >> label)) throw Error(ErrorKind::Syntax, "expected '" + kw + " level from to label'", ln);
            Corner start = kw == "h" ? Corner{a, level} : Corner{level, a};
            Corner end = kw == "h" ? Corner{b, level} : Corner{level, b};
            auto& c = comp(label);
            auto& e = ends[label];
            if (!e.empty() && !(e.back() == start))
                throw Error(ErrorKind::Syntax, "segment does not continue the previous one of " + label, ln);
            c.corners.push_back(start);
            e.push_back(end);
        } else {
            throw Error(ErrorKind::Syntax, "unknown statement '" + kw + "'", ln);
        }
    }
    for (const auto& c : g.components)
        if (c.corners.empty() || !(ends[c.label].back() == c.corners.front()))
            throw Error(ErrorKind::Unclosed, "component " + c.label + " does not close");
    validate(g);
    return g;
}

}  // namespace palf
