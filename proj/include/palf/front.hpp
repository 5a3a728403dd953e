#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace palf {

struct Event {
    enum class Kind { LeftCusp, RightCusp, Cross };
    Kind kind;
    int row;
    std::string label;  // only for left cusps
    int line = 0;

    bool operator==(const Event&) const = default;
};

// 1-handle: the dotted circle wraps rows lo..hi just before events[column].
// An empty handle has hi == lo - 1 and sits on top of the strands.
struct HandleDecl {
    std::string id;
    std::size_t column;
    int lo;
    int hi;
    int line = 0;

    int strands() const { return hi - lo + 1; }
    bool operator==(const HandleDecl&) const = default;
};

struct TwistRecord {
    std::string handle;
    int strands;
    int inserted;   // s(s-1) braid letters
    int cancelled;  // letters cancelled against following crossings
    int zigzags;    // letters realized by a cusp pair
    bool operator==(const TwistRecord&) const = default;
};

struct FrontDiagram {
    std::vector<Event> events;
    std::vector<HandleDecl> handles;
    std::vector<std::string> components;  // first-appearance order
    std::vector<std::string> dotted;
    std::vector<TwistRecord> twists;
    bool modified = false;

    bool is_dotted(const std::string& label) const;
    bool has_component(const std::string& label) const;
    std::vector<std::string> two_handles() const;
    bool operator==(const FrontDiagram&) const = default;
};

// Pieces are the arcs between cusps; each left cusp spawns a lower and an upper piece.
struct FrontTrace {
    struct Crossing {
        std::size_t column;
        int lower;
        int upper;
    };
    struct Join {
        int a;
        int b;
        bool left;
        std::size_t column;
    };
    std::vector<std::string> piece_label;
    std::vector<int> piece_dir;  // +1 travels right
    std::vector<Crossing> crossings;
    std::vector<Join> joins;
};

struct ClassicalInvariants {
    std::string label;
    int writhe = 0;
    int left_cusps = 0;
    int tb = 0;
};

FrontDiagram parse_front(std::string_view text);
std::string to_text(const FrontDiagram& d);

FrontTrace trace_front(const FrontDiagram& d);
int crossing_sign(const FrontTrace& t, const FrontTrace::Crossing& c);

std::vector<ClassicalInvariants> classical_invariants(const FrontDiagram& d);
int thurston_bennequin(const FrontDiagram& d, const std::string& label);
int writhe(const FrontDiagram& d);

FrontDiagram modify_for_handles(const FrontDiagram& d);

}  // namespace palf
