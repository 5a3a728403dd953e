#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "palf/front.hpp"
#include "palf/grid.hpp"
#include "palf/monodromy.hpp"
#include "palf/surface.hpp"

namespace palf {

struct LedgerEntry {
    std::string label;
    int tb = 0;
    int surface_framing = 0;
    int attached_framing = 0;  // tb - 1
    bool operator==(const LedgerEntry&) const = default;
};

// the counts a PALF claims about itself; verify recomputes them
struct PalfHeader {
    int p = 0;
    int q = 0;
    int k = 0;
    int n = 0;
    int m = 0;
    int genus = 0;
    int boundary = 0;
    bool operator==(const PalfHeader&) const = default;
};

struct Palf {
    PalfHeader header;
    LyonSurface fiber{2, 2};
    TwistWord cycles;
    std::vector<LedgerEntry> ledger;
    std::vector<std::string> dotted;
    std::pair<int, int> raw_grid{0, 0};
    bool operator==(const Palf&) const = default;
};

struct AuditItem {
    std::string name;
    bool pass;
    std::string detail;
};

struct AuditReport {
    std::vector<AuditItem> items;
    bool ok() const;
    std::string to_text() const;
};

// where a dotted component punctures the fiber: the gap just before the foot
// of its first corner band, on the disk it leaves along
Puncture puncture_slot(const GridComponent& c, const LyonSurface& s);

Palf build_palf(const FrontDiagram& d, int min_p = 2, int min_q = 2);
AuditReport verify(const Palf& x);

struct Family {
    std::vector<Palf> members;
    std::vector<int> genera;
    bool certified = false;  // genera pairwise distinct
};

Family family(const FrontDiagram& d, const std::vector<std::pair<int, int>>& sizes);

nlohmann::json to_json(const Palf& x);
Palf palf_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AuditReport& r);

}  // namespace palf
