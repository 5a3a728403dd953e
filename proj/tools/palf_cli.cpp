#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "palf/error.hpp"
#include "palf/front.hpp"
#include "palf/grid.hpp"
#include "palf/palf.hpp"

using namespace palf;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Argument, "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw Error(ErrorKind::Argument, "cannot write " + out);
    f << text;
}

std::vector<std::pair<int, int>> parse_sizes(const std::string& spec) {
    std::vector<std::pair<int, int>> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        int p = 0, q = 0;
        char comma = 0, extra = 0;
        std::istringstream is(item);
        if (!(is >> p >> comma >> q) || comma != ',' || (is >> extra))
            throw Error(ErrorKind::Argument, "bad size \"" + item + "\", expected p,q");
        if (p < 2 || q < 2) throw Error(ErrorKind::Argument, "sizes must be at least 2");
        out.emplace_back(p, q);
    }
    if (out.empty()) throw Error(ErrorKind::Argument, "--sizes is empty");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Build and audit positive allowable Lefschetz fibrations from Legendrian fronts"};
    app.require_subcommand(1);

    std::string input, out;
    int min_p = 2, min_q = 2;
    bool as_json = false, raw = false;
    std::string sizes;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", input, "input file")->required();
        sub->add_option("--out", out, "write output to PATH");
        sub->add_flag("--json", as_json, "JSON output");
    };
    auto add_min = [&](CLI::App* sub) {
        sub->add_option("--min-p", min_p, "lower bound for p")->check(CLI::Range(2, 1 << 20));
        sub->add_option("--min-q", min_q, "lower bound for q")->check(CLI::Range(2, 1 << 20));
    };

    auto* tb = app.add_subcommand("tb", "classical invariants per component");
    add_common(tb);
    auto* grid = app.add_subcommand("grid", "square-bridge grid diagram");
    add_common(grid);
    add_min(grid);
    grid->add_flag("--raw", raw, "skip coprime padding");
    auto* build = app.add_subcommand("build", "build and audit a PALF");
    add_common(build);
    add_min(build);
    auto* ver = app.add_subcommand("verify", "re-audit a serialized PALF");
    add_common(ver);
    auto* fam = app.add_subcommand("family", "build over a list of sizes and certify distinct genera");
    add_common(fam);
    fam->add_option("--sizes", sizes, "p1,q1;p2,q2;...")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*tb) {
            auto d = parse_front(read_file(input));
            auto inv = classical_invariants(d);
            if (as_json) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& c : inv)
                    j.push_back({{"label", c.label}, {"writhe", c.writhe}, {"left_cusps", c.left_cusps}, {"tb", c.tb}});
                emit(j.dump(2) + "\n", out);
            } else {
                std::string text;
                for (const auto& c : inv)
                    text += c.label + ": writhe " + std::to_string(c.writhe) + ", left cusps " +
                            std::to_string(c.left_cusps) + ", tb = " + std::to_string(c.tb) + "\n";
                emit(text, out);
            }
            return 0;
        }
        if (*grid) {
            auto d = modify_for_handles(parse_front(read_file(input)));
            auto g = to_square_bridge(d);
            if (!raw) g = pad_coprime(g, min_p, min_q);
            if (as_json) {
                nlohmann::json j;
                j["p"] = g.p;
                j["q"] = g.q;
                j["text"] = to_text(g);
                emit(j.dump(2) + "\n", out);
            } else {
                emit(to_text(g), out);
            }
            return 0;
        }
        if (*build) {
            auto d = parse_front(read_file(input));
            Palf x;
            try {
                x = build_palf(d, min_p, min_q);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::Audit) throw;
                std::cerr << e.what() << "\n";
                return 1;
            }
            emit(to_json(x).dump(2) + "\n", out);
            auto report = verify(x);
            if (as_json)
                std::cerr << to_json(report).dump(2) << "\n";
            else
                std::cerr << report.to_text();
            return report.ok() ? 0 : 1;
        }
        if (*ver) {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(read_file(input));
            } catch (const nlohmann::json::parse_error& e) {
                throw Error(ErrorKind::Syntax, e.what());
            }
            auto x = palf_from_json(j);
            auto report = verify(x);
            emit(as_json ? to_json(report).dump(2) + "\n" : report.to_text(), out);
            return report.ok() ? 0 : 1;
        }
        if (*fam) {
            auto d = parse_front(read_file(input));
            auto f = family(d, parse_sizes(sizes));
            if (as_json) {
                nlohmann::json j;
                j["members"] = nlohmann::json::array();
                for (const auto& m : f.members) j["members"].push_back(to_json(m));
                j["genera"] = f.genera;
                j["certified"] = f.certified;
                emit(j.dump(2) + "\n", out);
            } else {
                std::string text;
                for (const auto& m : f.members)
                    text += "(" + std::to_string(m.header.p) + "," + std::to_string(m.header.q) + "): m = " +
                            std::to_string(m.header.m) + ", genus " + std::to_string(m.header.genus) + ", boundary " +
                            std::to_string(m.header.boundary) + "\n";
                text += f.certified ? "genera pairwise distinct: certified\n" : "genera repeat: not certified\n";
                emit(text, out);
            }
            return f.certified ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::Audit ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
