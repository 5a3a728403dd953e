#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "palf/grid.hpp"
#include "palf/matrix.hpp"

namespace palf {

// the curve crosses band (i, j); d_to_e gives the direction of travel
struct BandVisit {
    int i;
    int j;
    bool d_to_e;
    bool operator==(const BandVisit&) const = default;
};

struct BandCycle {
    std::vector<BandVisit> visits;
    bool operator==(const BandCycle&) const = default;
};

BandCycle band_cycle(const std::vector<Corner>& corners);
BandCycle square_cycle(int i, int j);
std::vector<Corner> corners_of(const BandCycle& c);

// Slots on a disk: 2k is the gap just before band foot k, 2k+1 lies on foot k.
// Feet run j = q..1 on D_i and i = 1..p on E_j.
struct Puncture {
    bool on_d;
    int index;
    int slot;
    bool operator==(const Puncture&) const = default;
};

struct Dart {
    int edge;
    int end;  // 0: D end of a band or tail of a puncture loop
};

class LyonSurface {
public:
    LyonSurface(int p, int q);

    int p() const { return p_; }
    int q() const { return q_; }
    int k() const { return static_cast<int>(punctures_.size()); }
    const std::vector<Puncture>& punctures() const { return punctures_; }

    int vertex_count() const { return p_ + q_; }
    int edge_count() const { return p_ * q_ + k(); }
    int band_edge(int i, int j) const { return (i - 1) * q_ + (j - 1); }
    int d_vertex(int i) const { return i - 1; }
    int e_vertex(int j) const { return p_ + j - 1; }

    int euler_characteristic() const { return p_ + q_ - p_ * q_ - k(); }
    int boundary_count() const;
    int genus() const { return (2 - euler_characteristic() - boundary_count()) / 2; }

    // cyclic dart order around each disk
    std::vector<std::vector<Dart>> rotation() const;
    // one closed spine walk per boundary component
    std::vector<IntVector> boundary_classes() const;

    LyonSurface punctured(const Puncture& slot) const;
    LyonSurface registered(const BandCycle& c) const;
    const std::set<std::pair<int, int>>& registered_bands() const { return registered_; }

    bool operator==(const LyonSurface& o) const {
        return p_ == o.p_ && q_ == o.q_ && punctures_ == o.punctures_;
    }

private:
    int p_;
    int q_;
    std::vector<Puncture> punctures_;
    std::set<std::pair<int, int>> registered_;
};

LyonSurface build_lyon(int p, int q, int k = 0);

IntVector edge_vector(const BandCycle& c, const LyonSurface& s);
long long pairing(const LyonSurface& s, const IntVector& a, const IntVector& b);

struct HomologyData {
    LyonSurface surface;
    int rank = 0;
    std::vector<int> generators;  // non-tree edge carrying each basis class
    std::vector<IntVector> basis;  // edge vectors
    IntMatrix pairing;

    IntVector coords(const IntVector& edge_vec) const;
    IntVector coords(const BandCycle& c) const;
    int radical_rank() const;
};

HomologyData homology(const LyonSurface& s);
bool is_nonseparating(const BandCycle& c, const HomologyData& h);

BandCycle embed_component(const GridDiagram& g, const std::string& label, const LyonSurface& s);

}  // namespace palf
