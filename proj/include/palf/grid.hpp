#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "palf/front.hpp"

namespace palf {

// (j, i): vertical level j, horizontal level i, both 1-based
struct Corner {
    int j;
    int i;
    bool operator==(const Corner&) const = default;
    auto operator<=>(const Corner&) const = default;
};

struct GridComponent {
    std::string label;
    bool dotted = false;
    std::vector<Corner> corners;  // traversal order; corners[k] -> corners[k+1] is one segment
    bool operator==(const GridComponent&) const = default;
};

// horizontal: level = i, span from..to in j (traversal direction kept)
// vertical:   level = j, span from..to in i
struct Segment {
    int level;
    int from;
    int to;
    std::string label;
};

struct GridDiagram {
    int p = 0;
    int q = 0;
    std::vector<GridComponent> components;
    bool vertical_under = true;

    std::vector<Segment> horizontals() const;
    std::vector<Segment> verticals() const;
    const GridComponent& component(const std::string& label) const;
    bool operator==(const GridDiagram&) const = default;
};

// throws Error(Range) on a malformed grid
void validate(const GridDiagram& g);

GridDiagram to_square_bridge(const FrontDiagram& d);

std::pair<int, int> coprime_size(int p, int q, int min_p, int min_q);
GridDiagram pad_coprime(const GridDiagram& g, int min_p, int min_q);

int writhe_grid(const GridDiagram& g, const std::string& label);
int writhe_grid(const GridComponent& c);
// corners whose arms point up and right: the image of left cusps
int up_right_corners(const GridComponent& c);

std::string to_text(const GridDiagram& g);
GridDiagram parse_grid(std::string_view text);

}  // namespace palf
