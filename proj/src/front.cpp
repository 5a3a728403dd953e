#include "palf/front.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "palf/error.hpp"

namespace palf {

bool FrontDiagram::is_dotted(const std::string& label) const {
    return std::find(dotted.begin(), dotted.end(), label) != dotted.end();
}

bool FrontDiagram::has_component(const std::string& label) const {
    return std::find(components.begin(), components.end(), label) != components.end();
}

std::vector<std::string> FrontDiagram::two_handles() const {
    std::vector<std::string> out;
    for (const auto& c : components)
        if (!is_dotted(c)) out.push_back(c);
    return out;
}

namespace {

struct Token {
    std::string text;
    int column;
};

struct Statement {
    std::vector<Token> tokens;
    int line;
};

std::vector<Statement> split_statements(std::string_view text) {
    std::vector<Statement> out;
    Statement cur{{}, 1};
    int line = 1, col = 0;
    bool comment = false;
    std::string word;
    int word_col = 0;
    auto flush_word = [&] {
        if (!word.empty()) cur.tokens.push_back({word, word_col});
        word.clear();
    };
    auto flush_stmt = [&] {
        flush_word();
        if (!cur.tokens.empty()) out.push_back(cur);
        cur = Statement{{}, line};
    };
    for (char ch : text) {
        ++col;
        if (ch == '\n') {
            comment = false;
            flush_stmt();
            ++line;
            col = 0;
            cur.line = line;
            continue;
        }
        if (comment) continue;
        if (ch == '#') {
            comment = true;
            continue;
        }
        if (ch == ';') {
            flush_stmt();
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            flush_word();
            continue;
        }
        if (word.empty()) {
            word_col = col;
            if (cur.tokens.empty()) cur.line = line;
        }
        word.push_back(ch);
    }
    flush_stmt();
    return out;
}

int parse_int(const Token& t, int line) {
    int v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
        throw Error(ErrorKind::Syntax, "expected an integer, got '" + t.text + "'", line, t.column);
    return v;
}

void expect_count(const Statement& s, std::size_t lo, std::size_t hi) {
    if (s.tokens.size() < lo || s.tokens.size() > hi) {
        int col = s.tokens.size() > hi ? s.tokens[hi].column : s.tokens.back().column;
        throw Error(ErrorKind::Syntax, "wrong number of arguments to '" + s.tokens[0].text + "'", s.line, col);
    }
}

}  // namespace

FrontDiagram parse_front(std::string_view text) {
    FrontDiagram d;
    std::vector<std::string> rows;
    int declared = -1;
    int last_line = 1;
    bool first = true;
    for (const auto& s : split_statements(text)) {
        last_line = s.line;
        const auto& kw = s.tokens[0].text;
        int n = static_cast<int>(rows.size());
        if (kw == "components:" || kw == "components") {
            if (!first)
                throw Error(ErrorKind::Syntax, "components header must come first", s.line, s.tokens[0].column);
            expect_count(s, 2, 2);
            declared = parse_int(s.tokens[1], s.line);
            if (declared < 0) throw Error(ErrorKind::Syntax, "negative component count", s.line, s.tokens[1].column);
        } else if (kw == "lcusp") {
            expect_count(s, 2, 3);
            int r = parse_int(s.tokens[1], s.line);
            std::string label = s.tokens.size() == 3 ? s.tokens[2].text : "K";
            if (r < 0 || r > n)
                throw Error(ErrorKind::StrandCount,
                            "lcusp row " + std::to_string(r) + " outside 0.." + std::to_string(n), s.line,
                            s.tokens[1].column);
            rows.insert(rows.begin() + r, 2, label);
            d.events.push_back({Event::Kind::LeftCusp, r, label, s.line});
            if (!d.has_component(label)) d.components.push_back(label);
        } else if (kw == "rcusp" || kw == "cross") {
            expect_count(s, 2, 2);
            int r = parse_int(s.tokens[1], s.line);
            if (r < 0 || r + 1 >= n)
                throw Error(ErrorKind::StrandCount,
                            kw + " row " + std::to_string(r) + " needs strands " + std::to_string(r) + "," +
                                std::to_string(r + 1) + " but only " + std::to_string(n) + " exist",
                            s.line, s.tokens[1].column);
            if (kw == "rcusp") {
                if (rows[r] != rows[r + 1])
                    throw Error(ErrorKind::Component, "rcusp joins components " + rows[r] + " and " + rows[r + 1],
                                s.line, s.tokens[0].column);
                rows.erase(rows.begin() + r, rows.begin() + r + 2);
                d.events.push_back({Event::Kind::RightCusp, r, "", s.line});
            } else {
                std::swap(rows[r], rows[r + 1]);
                d.events.push_back({Event::Kind::Cross, r, "", s.line});
            }
        } else if (kw == "handle") {
            expect_count(s, 4, 4);
            if (s.tokens[2].text != "rows")
                throw Error(ErrorKind::Syntax, "expected 'rows'", s.line, s.tokens[2].column);
            HandleDecl h{s.tokens[1].text, d.events.size(), n, n - 1, s.line};
            const auto& spec = s.tokens[3];
            if (spec.text != "none") {
                auto dash = spec.text.find('-', 1);
                if (dash == std::string::npos)
                    throw Error(ErrorKind::Syntax, "expected rows as <r1>-<r2>", s.line, spec.column);
                h.lo = parse_int({spec.text.substr(0, dash), spec.column}, s.line);
                h.hi = parse_int({spec.text.substr(dash + 1), spec.column}, s.line);
                if (h.lo < 0 || h.hi < h.lo || h.hi >= n)
                    throw Error(ErrorKind::Handle,
                                "handle " + h.id + " references rows " + spec.text + " but " + std::to_string(n) +
                                    " strands exist here",
                                s.line, spec.column);
            }
            for (const auto& o : d.handles)
                if (o.id == h.id) throw Error(ErrorKind::Handle, "duplicate handle " + h.id, s.line, s.tokens[1].column);
            d.handles.push_back(h);
        } else {
            throw Error(ErrorKind::Syntax, "unknown statement '" + kw + "'", s.line, s.tokens[0].column);
        }
        first = false;
    }
    if (!rows.empty())
        throw Error(ErrorKind::Unclosed, std::to_string(rows.size()) + " strands left open at end of input", last_line);
    for (const auto& h : d.handles)
        if (d.has_component(h.id))
            throw Error(ErrorKind::Handle, "handle id " + h.id + " clashes with a component label", h.line);
    if (declared >= 0 && declared != static_cast<int>(d.components.size()))
        throw Error(ErrorKind::Component,
                    "header declares " + std::to_string(declared) + " components, diagram has " +
                        std::to_string(d.components.size()));
    trace_front(d);
    return d;
}

std::string to_text(const FrontDiagram& d) {
    std::ostringstream os;
    os << "components: " << d.components.size() << "\n";
    std::size_t h = 0;
    auto handles = d.handles;
    std::stable_sort(handles.begin(), handles.end(),
                     [](const HandleDecl& a, const HandleDecl& b) { return a.column < b.column; });
    for (std::size_t c = 0; c <= d.events.size(); ++c) {
        while (h < handles.size() && handles[h].column == c) {
            const auto& hd = handles[h++];
            os << "handle " << hd.id << " rows ";
            if (hd.strands() == 0)
                os << "none\n";
            else
                os << hd.lo << "-" << hd.hi << "\n";
        }
        if (c == d.events.size()) break;
        const auto& e = d.events[c];
        switch (e.kind) {
            case Event::Kind::LeftCusp: os << "lcusp " << e.row << " " << e.label << "\n"; break;
            case Event::Kind::RightCusp: os << "rcusp " << e.row << "\n"; break;
            case Event::Kind::Cross: os << "cross " << e.row << "\n"; break;
        }
    }
    return os.str();
}

FrontTrace trace_front(const FrontDiagram& d) {
    FrontTrace t;
    std::vector<int> rows;
    std::vector<int> left_of, right_of;
    for (std::size_t c = 0; c < d.events.size(); ++c) {
        const auto& e = d.events[c];
        int n = static_cast<int>(rows.size());
        if (e.kind == Event::Kind::LeftCusp) {
            if (e.row < 0 || e.row > n) throw Error(ErrorKind::StrandCount, "lcusp row out of range", e.line);
            int a = static_cast<int>(t.piece_label.size());
            t.piece_label.push_back(e.label);
            t.piece_label.push_back(e.label);
            left_of.push_back(a + 1);
            left_of.push_back(a);
            right_of.push_back(-1);
            right_of.push_back(-1);
            rows.insert(rows.begin() + e.row, {a, a + 1});
            t.joins.push_back({a, a + 1, true, c});
        } else {
            if (e.row < 0 || e.row + 1 >= n) throw Error(ErrorKind::StrandCount, "row out of range", e.line);
            int a = rows[e.row], b = rows[e.row + 1];
            if (e.kind == Event::Kind::RightCusp) {
                if (t.piece_label[a] != t.piece_label[b])
                    throw Error(ErrorKind::Component, "rcusp joins two components", e.line);
                right_of[a] = b;
                right_of[b] = a;
                t.joins.push_back({a, b, false, c});
                rows.erase(rows.begin() + e.row, rows.begin() + e.row + 2);
            } else {
                t.crossings.push_back({c, a, b});
                std::swap(rows[e.row], rows[e.row + 1]);
            }
        }
    }
    if (!rows.empty()) throw Error(ErrorKind::Unclosed, std::to_string(rows.size()) + " strands left open");

    t.piece_dir.assign(t.piece_label.size(), 0);
    std::set<std::string> started;
    for (const auto& j : t.joins) {
        if (!j.left || t.piece_dir[j.a] != 0) continue;
        const auto& label = t.piece_label[j.a];
        if (!started.insert(label).second)
            throw Error(ErrorKind::Component, "component " + label + " is not a single closed curve");
        int cur = j.a, dir = 1;
        do {
            t.piece_dir[cur] = dir;
            cur = dir > 0 ? right_of[cur] : left_of[cur];
            dir = -dir;
        } while (cur != j.a);
    }
    return t;
}

int crossing_sign(const FrontTrace& t, const FrontTrace::Crossing& c) {
    return t.piece_dir[c.lower] == t.piece_dir[c.upper] ? 1 : -1;
}

std::vector<ClassicalInvariants> classical_invariants(const FrontDiagram& d) {
    auto t = trace_front(d);
    std::map<std::string, ClassicalInvariants> by;
    for (const auto& c : d.components) by[c].label = c;
    for (const auto& x : t.crossings) {
        const auto& la = t.piece_label[x.lower];
        if (la == t.piece_label[x.upper]) by[la].writhe += crossing_sign(t, x);
    }
    for (const auto& j : t.joins)
        if (j.left) by[t.piece_label[j.a]].left_cusps += 1;
    std::vector<ClassicalInvariants> out;
    for (const auto& c : d.components) {
        auto ci = by[c];
        ci.tb = ci.writhe - ci.left_cusps;
        out.push_back(ci);
    }
    return out;
}

int thurston_bennequin(const FrontDiagram& d, const std::string& label) {
    if (!d.has_component(label)) throw Error(ErrorKind::Argument, "unknown component " + label);
    for (const auto& ci : classical_invariants(d))
        if (ci.label == label) return ci.tb;
    return 0;
}

int writhe(const FrontDiagram& d) {
    auto t = trace_front(d);
    int w = 0;
    for (const auto& x : t.crossings) w += crossing_sign(t, x);
    return w;
}

}  // namespace palf
