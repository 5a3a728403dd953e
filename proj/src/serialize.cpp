#include "palf/error.hpp"
#include "palf/palf.hpp"

namespace palf {

using nlohmann::json;

namespace {

std::vector<Corner> corners_from_bands(const std::vector<std::pair<int, int>>& bands) {
    std::vector<Corner> out;
    for (const auto& [i, j] : bands) out.push_back({j, i});
    return out;
}

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::Syntax, std::string("missing field \"") + key + "\"");
    return j.at(key);
}

template <class T>
T field(const json& j, const char* key) {
    const json& v = member(j, key);
    try {
        return v.get<T>();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Syntax, std::string("bad field \"") + key + "\": " + e.what());
    }
}

}  // namespace

json to_json(const Palf& x) {
    const auto& h = x.header;
    json out;
    out["palf-format"] = 1;
    out["header"] = {{"p", h.p}, {"q", h.q}, {"k", h.k}, {"n", h.n}, {"m", h.m}, {"genus", h.genus},
                     {"boundary", h.boundary}};
    out["raw_grid"] = {x.raw_grid.first, x.raw_grid.second};
    out["punctures"] = json::array();
    for (const auto& p : x.fiber.punctures())
        out["punctures"].push_back({{"disk", p.on_d ? "D" : "E"}, {"index", p.index}, {"slot", p.slot}});
    out["dotted"] = x.dotted;
    out["cycles"] = json::array();
    for (const auto& e : x.cycles.entries) {
        json bands = json::array();
        for (const auto& v : e.cycle.visits) bands.push_back({v.i, v.j});
        json prov;
        if (e.provenance.torus)
            prov = {{"kind", "torus"}, {"square", {e.provenance.i, e.provenance.j}}};
        else
            prov = {{"kind", "handle"}, {"label", e.provenance.label}};
        out["cycles"].push_back({{"bands", bands}, {"provenance", prov}});
    }
    out["ledger"] = json::array();
    for (const auto& l : x.ledger)
        out["ledger"].push_back({{"label", l.label},
                                 {"tb", l.tb},
                                 {"surface_framing", l.surface_framing},
                                 {"attached_framing", l.attached_framing}});
    return out;
}

Palf palf_from_json(const json& j) {
    if (!j.is_object()) throw Error(ErrorKind::Syntax, "PALF document must be a JSON object");
    int fmt = field<int>(j, "palf-format");
    if (fmt != 1) throw Error(ErrorKind::Syntax, "unsupported palf-format " + std::to_string(fmt));
    Palf x;
    const json& h = member(j, "header");
    x.header = {field<int>(h, "p"), field<int>(h, "q"), field<int>(h, "k"), field<int>(h, "n"),
                field<int>(h, "m"), field<int>(h, "genus"), field<int>(h, "boundary")};
    if (j.contains("raw_grid")) {
        auto r = field<std::vector<int>>(j, "raw_grid");
        if (r.size() != 2) throw Error(ErrorKind::Syntax, "raw_grid must have two entries");
        x.raw_grid = {r[0], r[1]};
    }
    if (x.header.p < 2 || x.header.q < 2) throw Error(ErrorKind::Range, "header p and q must be at least 2");
    LyonSurface s(x.header.p, x.header.q);
    if (j.contains("punctures")) {
        for (const auto& p : member(j, "punctures")) {
            auto disk = field<std::string>(p, "disk");
            if (disk != "D" && disk != "E") throw Error(ErrorKind::Syntax, "puncture disk must be \"D\" or \"E\"");
            s = s.punctured({disk == "D", field<int>(p, "index"), field<int>(p, "slot")});
        }
    }
    x.fiber = s;
    if (j.contains("dotted")) x.dotted = field<std::vector<std::string>>(j, "dotted");
    if (!member(j, "cycles").is_array()) throw Error(ErrorKind::Syntax, "missing cycles array");
    for (const auto& c : member(j, "cycles")) {
        auto bands = field<std::vector<std::pair<int, int>>>(c, "bands");
        const json& p = member(c, "provenance");
        auto kind = field<std::string>(p, "kind");
        Provenance prov;
        if (kind == "torus") {
            auto sq = field<std::vector<int>>(p, "square");
            if (sq.size() != 2) throw Error(ErrorKind::Syntax, "square provenance needs two entries");
            prov = {true, sq[0], sq[1], ""};
        } else if (kind == "handle") {
            prov = {false, 0, 0, field<std::string>(p, "label")};
        } else {
            throw Error(ErrorKind::Syntax, "unknown provenance kind \"" + kind + "\"");
        }
        x.cycles.entries.push_back({band_cycle(corners_from_bands(bands)), prov});
    }
    if (j.contains("ledger")) {
        for (const auto& l : member(j, "ledger"))
            x.ledger.push_back({field<std::string>(l, "label"), field<int>(l, "tb"), field<int>(l, "surface_framing"),
                                field<int>(l, "attached_framing")});
    }
    return x;
}

json to_json(const AuditReport& r) {
    json out;
    out["ok"] = r.ok();
    out["items"] = json::array();
    for (const auto& i : r.items) out["items"].push_back({{"name", i.name}, {"pass", i.pass}, {"detail", i.detail}});
    return out;
}

}  // namespace palf
