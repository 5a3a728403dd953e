#pragma once

#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "palf/embed3d.hpp"
#include "palf/front.hpp"

namespace support {

inline std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline std::string sample_path(const std::string& name) { return std::string(PALF_SAMPLES_DIR) + "/" + name; }

inline palf::FrontDiagram sample(const std::string& name) { return palf::parse_front(read_text(sample_path(name + ".front"))); }

inline const std::vector<std::string>& corpus() {
    static const std::vector<std::string> names{
        "unknot",       "trefoil",           "hopf",    "fishtail",     "example2",     "unlink",
        "stabilized_unknot", "torus25",      "handle_empty", "two_handles", "twisted_unknot", "trefoil_stabilized"};
    return names;
}

inline std::vector<oracle::P3> points(const palf::Polyline3& l) {
    std::vector<oracle::P3> out;
    const double d = static_cast<double>(l.denom);
    for (const auto& p : l.pts) out.push_back({p[0] / d, p[1] / d, p[2] / d});
    return out;
}

inline int gauss_lk(const palf::Polyline3& a, const palf::Polyline3& b) {
    return static_cast<int>(std::lround(oracle::gauss_linking(points(a), points(b))));
}

// A random closed front with at most max_components components and at most
// max_handles handles, all declared before the first right cusp. Components
// are found with a union-find over strand ids and then labelled.
inline std::string random_front(std::mt19937& rng, int max_components, int max_handles, int max_strands,
                                int max_events) {
    auto roll = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    while (true) {
        struct Ev {
            char kind;
            int row;
            int strand = -1;  // lower strand id for cusps
        };
        std::vector<Ev> evs;
        std::vector<int> rows;  // strand ids
        std::vector<int> parent;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int budget = max_events;
        while (budget-- > 0 || !rows.empty()) {
            int n = static_cast<int>(rows.size());
            int choice = roll(3);
            if (budget <= 0) choice = 2;
            if (n + 2 > max_strands && choice == 0) choice = roll(2) + 1;
            if (n == 0) choice = 0;
            if (choice == 1 && n < 2) choice = 0;
            if (choice == 0) {
                int r = roll(n + 1);
                int a = static_cast<int>(parent.size());
                parent.push_back(a);
                parent.push_back(a);
                rows.insert(rows.begin() + r, {a, a + 1});
                evs.push_back({'l', r, a});
            } else if (choice == 1) {
                int r = roll(n - 1);
                std::swap(rows[r], rows[r + 1]);
                evs.push_back({'x', r});
            } else {
                int r = roll(n - 1);
                parent[find(rows[r])] = find(rows[r + 1]);
                rows.erase(rows.begin() + r, rows.begin() + r + 2);
                evs.push_back({'r', r});
            }
        }
        std::map<int, std::string> label;
        for (const auto& e : evs)
            if (e.kind == 'l') {
                int root = find(e.strand);
                if (!label.count(root)) label[root] = std::string(1, static_cast<char>('A' + label.size()));
            }
        if (static_cast<int>(label.size()) > max_components) continue;

        // handle positions: columns up to the first right cusp
        std::size_t first_r = 0;
        while (first_r < evs.size() && evs[first_r].kind != 'r') ++first_r;
        std::vector<int> strands_at(first_r + 1, 0);
        for (std::size_t c = 0; c < first_r; ++c) strands_at[c + 1] = strands_at[c] + (evs[c].kind == 'l' ? 2 : 0);
        int handles = roll(max_handles + 1);
        std::multimap<std::size_t, std::string> decl;
        for (int h = 0; h < handles; ++h) {
            std::size_t col = static_cast<std::size_t>(roll(static_cast<int>(first_r) + 1));
            int n = strands_at[col];
            std::string rows_spec = "none";
            if (n > 0 && roll(4) != 0) {
                int lo = roll(n);
                int hi = lo + roll(std::min(n - lo, 3));
                rows_spec = std::to_string(lo) + "-" + std::to_string(hi);
            }
            decl.insert({col, "handle H" + std::to_string(h) + " rows " + rows_spec});
        }

        std::ostringstream os;
        os << "components: " << label.size() << "\n";
        for (std::size_t c = 0; c <= evs.size(); ++c) {
            auto range = decl.equal_range(c);
            for (auto it = range.first; it != range.second; ++it) os << it->second << "\n";
            if (c == evs.size()) break;
            const auto& e = evs[c];
            if (e.kind == 'l') os << "lcusp " << e.row << " " << label[find(e.strand)] << "\n";
            if (e.kind == 'x') os << "cross " << e.row << "\n";
            if (e.kind == 'r') os << "rcusp " << e.row << "\n";
        }
        return os.str();
    }
}

}  // namespace support
