#pragma once

#include <string>
#include <vector>

#include "palf/matrix.hpp"
#include "palf/surface.hpp"

namespace palf {

struct Provenance {
    bool torus = true;
    int i = 0;
    int j = 0;
    std::string label;

    std::string describe() const;
    bool operator==(const Provenance&) const = default;
};

struct TwistEntry {
    BandCycle cycle;
    Provenance provenance;
    bool operator==(const TwistEntry&) const = default;
};

// entries[0] is applied first: the word reads D(entries[m-1]) ... D(entries[0])
struct TwistWord {
    std::vector<TwistEntry> entries;
    std::size_t size() const { return entries.size(); }
    bool operator==(const TwistWord&) const = default;
};

TwistWord torus_vanishing_cycles(const LyonSurface& s);

IntMatrix twist_matrix(const BandCycle& c, const HomologyData& h);
IntMatrix word_matrix(const TwistWord& w, const HomologyData& h);
bool preserves_pairing(const IntMatrix& m, const IntMatrix& j);

Poly alexander_torus(int p, int q);
bool equal_up_to_unit(const Poly& a, const Poly& b);
std::string to_string(const Poly& f);

}  // namespace palf
