#include "prym/tower_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace prym {

namespace {

struct RawLine {
    int number;
    std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& msg) {
    throw std::runtime_error("tower file, line " + std::to_string(line) + ": " + msg);
}

std::vector<std::uint8_t> parse_signs(const std::string& bits, int n, int line) {
    if (static_cast<int>(bits.size()) != n)
        fail(line, "signs bitstring must have length " + std::to_string(n));
    std::vector<std::uint8_t> out(n);
    for (int i = 0; i < n; ++i) {
        if (bits[i] != '0' && bits[i] != '1') fail(line, "signs must be a 0/1 string");
        out[i] = bits[i] - '0';
    }
    return out;
}

}  // namespace

TowerFile load_tower(std::istream& in) {
    std::vector<RawLine> lines;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        RawLine rl;
        rl.number = lineno;
        std::string tok;
        while (ls >> tok) rl.tokens.push_back(tok);
        if (!rl.tokens.empty()) lines.push_back(std::move(rl));
    }
    if (lines.empty()) throw std::runtime_error("tower file: empty input");
    if (lines[0].tokens != std::vector<std::string>{"tower", "v1"})
        fail(lines[0].number, "expected header 'tower v1'");

    int base_genus = -1, degree = -1;
    struct BranchLine {
        std::string label;
        std::string perm;
        std::optional<std::string> signs;
        int number;
    };
    struct HandleLine {
        char kind;
        int index;
        std::string perm;
        std::optional<std::string> signs;
        int number;
    };
    struct GlueLine {
        std::string la, lb;
        int ca, cb;
        int number;
    };
    std::vector<BranchLine> branch_lines;
    std::vector<HandleLine> handle_lines;
    std::vector<GlueLine> glue_lines;
    bool any_signs = false;

    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& [num, toks] = lines[k];
        const std::string& head = toks[0];
        if (head == "base_genus") {
            if (toks.size() != 2) fail(num, "usage: base_genus <h>");
            base_genus = std::stoi(toks[1]);
            if (base_genus < 0) fail(num, "base genus must be non-negative");
        } else if (head == "degree") {
            if (toks.size() != 2) fail(num, "usage: degree <n>");
            degree = std::stoi(toks[1]);
            if (degree < 1) fail(num, "degree must be positive");
        } else if (head == "branch") {
            // cycle notation may contain spaces; everything between the
            // label and an optional trailing "signs <bits>" is the perm
            std::size_t signs_at = toks.size();
            if (toks.size() >= 2 && toks[toks.size() - 2] == "signs") signs_at = toks.size() - 2;
            if (toks.size() < 3 || signs_at < 3)
                fail(num, "usage: branch <label> <perm> [signs <bits>]");
            std::string perm;
            for (std::size_t j = 2; j < signs_at; ++j) perm += toks[j] + " ";
            BranchLine bl{toks[1], perm, std::nullopt, num};
            if (signs_at != toks.size()) {
                bl.signs = toks.back();
                any_signs = true;
            }
            branch_lines.push_back(std::move(bl));
        } else if (head == "handle") {
            std::size_t signs_at = toks.size();
            if (toks.size() >= 2 && toks[toks.size() - 2] == "signs") signs_at = toks.size() - 2;
            if (toks.size() < 4 || signs_at < 4)
                fail(num, "usage: handle <a|b> <index> <perm> [signs <bits>]");
            if (toks[1] != "a" && toks[1] != "b") fail(num, "handle kind must be 'a' or 'b'");
            std::string perm;
            for (std::size_t j = 3; j < signs_at; ++j) perm += toks[j] + " ";
            HandleLine hl{toks[1][0], std::stoi(toks[2]), perm, std::nullopt, num};
            if (hl.index < 1) fail(num, "handle index is 1-based");
            if (signs_at != toks.size()) {
                hl.signs = toks.back();
                any_signs = true;
            }
            handle_lines.push_back(std::move(hl));
        } else if (head == "glue") {
            if (toks.size() != 5) fail(num, "usage: glue <label> <cycle> <label> <cycle>");
            GlueLine gl{toks[1], toks[3], std::stoi(toks[2]), std::stoi(toks[4]), num};
            if (gl.ca < 1 || gl.cb < 1) fail(num, "glue cycle indices are 1-based");
            glue_lines.push_back(std::move(gl));
        } else {
            fail(num, "unknown directive '" + head + "'");
        }
    }
    if (base_genus < 0) throw std::runtime_error("tower file: missing base_genus");
    if (degree < 0) throw std::runtime_error("tower file: missing degree");

    BaseCurve base;
    base.genus = base_genus;
    for (const auto& bl : branch_lines) base.branch_labels.push_back(bl.label);

    auto label_index = [&](const std::string& l, int num) {
        for (std::size_t i = 0; i < base.branch_labels.size(); ++i)
            if (base.branch_labels[i] == l) return static_cast<int>(i);
        fail(num, "unknown branch label '" + l + "'");
    };

    // handles must come as a1 b1 a2 b2 ... in index order
    std::map<std::pair<int, char>, const HandleLine*> hmap;
    for (const auto& hl : handle_lines) {
        if (hl.index > base_genus) fail(hl.number, "handle index exceeds base genus");
        if (!hmap.emplace(std::make_pair(hl.index, hl.kind), &hl).second)
            fail(hl.number, "duplicate handle line");
    }
    if (static_cast<int>(handle_lines.size()) != 2 * base_genus)
        throw std::runtime_error("tower file: expected " + std::to_string(2 * base_genus) +
                                 " handle lines");

    TowerFile out;
    if (any_signs) {
        SignedTower t;
        t.base = base;
        t.degree = degree;
        for (int i = 1; i <= base_genus; ++i) {
            for (char kind : {'a', 'b'}) {
                const HandleLine* hl = hmap.at({i, kind});
                Perm p = [&] {
                    try {
                        return parse_cycles(hl->perm, degree);
                    } catch (const std::exception& e) {
                        fail(hl->number, e.what());
                    }
                }();
                std::vector<std::uint8_t> signs(degree, 0);
                if (hl->signs) signs = parse_signs(*hl->signs, degree, hl->number);
                t.handles.emplace_back(std::move(p), std::move(signs));
            }
        }
        for (const auto& bl : branch_lines) {
            Perm p = [&] {
                try {
                    return parse_cycles(bl.perm, degree);
                } catch (const std::exception& e) {
                    fail(bl.number, e.what());
                }
            }();
            std::vector<std::uint8_t> signs(degree, 0);
            if (bl.signs) signs = parse_signs(*bl.signs, degree, bl.number);
            t.branches.emplace_back(std::move(p), std::move(signs));
        }
        GluedTower g{std::move(t), {}};
        for (const auto& gl : glue_lines) {
            GluePair pr;
            pr.a = FiberPoint{label_index(gl.la, gl.number), gl.ca - 1};
            pr.b = FiberPoint{label_index(gl.lb, gl.number), gl.cb - 1};
            g.pairs.push_back(pr);
        }
        try {
            validate_glue(g);
        } catch (const std::exception& e) {
            throw std::runtime_error(std::string("tower file: ") + e.what());
        }
        out.tower = std::move(g);
    } else {
        MonodromyCover c;
        c.base = base;
        c.degree = degree;
        for (int i = 1; i <= base_genus; ++i) {
            for (char kind : {'a', 'b'}) {
                const HandleLine* hl = hmap.at({i, kind});
                try {
                    c.handles.push_back(parse_cycles(hl->perm, degree));
                } catch (const std::exception& e) {
                    fail(hl->number, e.what());
                }
            }
        }
        for (const auto& bl : branch_lines) {
            try {
                c.branches.push_back(parse_cycles(bl.perm, degree));
            } catch (const std::exception& e) {
                fail(bl.number, e.what());
            }
        }
        GluedCover g{std::move(c), {}};
        for (const auto& gl : glue_lines) {
            GluePair pr;
            pr.a = FiberPoint{label_index(gl.la, gl.number), gl.ca - 1};
            pr.b = FiberPoint{label_index(gl.lb, gl.number), gl.cb - 1};
            g.pairs.push_back(pr);
        }
        try {
            validate_glue(g);
        } catch (const std::exception& e) {
            throw std::runtime_error(std::string("tower file: ") + e.what());
        }
        out.cover = std::move(g);
    }
    return out;
}

TowerFile load_tower_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tower file '" + path + "'");
    return load_tower(in);
}

namespace {

std::string signs_string(const std::vector<std::uint8_t>& eps) {
    std::string s;
    for (auto b : eps) s.push_back(b ? '1' : '0');
    return s;
}

void render_header(std::ostringstream& os, const BaseCurve& base, int degree) {
    os << "tower v1\n";
    os << "base_genus " << base.genus << "\n";
    os << "degree " << degree << "\n";
}

void render_glue(std::ostringstream& os, const BaseCurve& base,
                 const std::vector<GluePair>& pairs) {
    for (const auto& pr : pairs) {
        os << "glue " << base.branch_labels[pr.a.label] << ' ' << pr.a.cycle + 1 << ' '
           << base.branch_labels[pr.b.label] << ' ' << pr.b.cycle + 1 << "\n";
    }
}

}  // namespace

std::string render_tower(const GluedTower& t) {
    std::ostringstream os;
    render_header(os, t.smooth.base, t.smooth.degree);
    for (std::size_t i = 0; i < t.smooth.handles.size(); ++i) {
        const auto& g = t.smooth.handles[i];
        os << "handle " << (i % 2 == 0 ? 'a' : 'b') << ' ' << i / 2 + 1 << ' '
           << render_cycles(g.sigma) << " signs " << signs_string(g.eps) << "\n";
    }
    for (std::size_t b = 0; b < t.smooth.branches.size(); ++b) {
        const auto& g = t.smooth.branches[b];
        os << "branch " << t.smooth.base.branch_labels[b] << ' ' << render_cycles(g.sigma)
           << " signs " << signs_string(g.eps) << "\n";
    }
    render_glue(os, t.smooth.base, t.pairs);
    return os.str();
}

std::string render_tower(const SignedTower& t) { return render_tower(GluedTower{t, {}}); }

std::string render_tower(const GluedCover& c) {
    std::ostringstream os;
    render_header(os, c.smooth.base, c.smooth.degree);
    for (std::size_t i = 0; i < c.smooth.handles.size(); ++i)
        os << "handle " << (i % 2 == 0 ? 'a' : 'b') << ' ' << i / 2 + 1 << ' '
           << render_cycles(c.smooth.handles[i]) << "\n";
    for (std::size_t b = 0; b < c.smooth.branches.size(); ++b)
        os << "branch " << c.smooth.base.branch_labels[b] << ' '
           << render_cycles(c.smooth.branches[b]) << "\n";
    render_glue(os, c.smooth.base, c.pairs);
    return os.str();
}

std::string render_tower(const MonodromyCover& c) { return render_tower(GluedCover{c, {}}); }

void write_tower_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write tower file '" + path + "'");
    out << contents;
}

}  // namespace prym
