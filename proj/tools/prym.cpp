#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "prym/cover.hpp"
#include "prym/delpezzo.hpp"
#include "prym/f2.hpp"
#include "prym/polygonal.hpp"
#include "prym/suites.hpp"
#include "prym/tower_io.hpp"

namespace {

using namespace prym;

constexpr const char* kVersion = "prymtool 1.0.0";

void describe_cover(std::ostream& os, const GluedCover& g) {
    os << "degree " << g.smooth.degree << " over base of genus " << g.smooth.base.genus
       << ", " << g.smooth.base.branch_labels.size() << " branch labels\n";
    auto comps = orbits(monodromy_tuple(g.smooth));
    os << "connected: " << (comps.size() == 1 ? "yes" : "no") << " (" << comps.size()
       << " component" << (comps.size() == 1 ? "" : "s") << ")\n";
    auto gs = genus(g.smooth);
    os << "genus per component:";
    for (int x : gs) os << ' ' << x;
    os << "\n";
    if (!g.pairs.empty()) os << "nodes: " << g.pairs.size() << ", p_a = "
                             << arithmetic_genus(g) << "\n";
}

int cmd_info(const std::string& path) {
    TowerFile tf = load_tower_file(path);
    if (tf.cover) {
        describe_cover(std::cout, *tf.cover);
        return 0;
    }
    const GluedTower& t = *tf.tower;
    const SignedTower& s = t.smooth;
    std::cout << "tower of degree " << s.degree << " over base of genus " << s.base.genus
              << ", " << s.base.branch_labels.size() << " branch labels\n";
    GluedCover c = glued_c(t), ct = glued_ctilde(t);
    auto cc = orbits(monodromy_tuple(c.smooth));
    auto cct = orbits(monodromy_tuple(ct.smooth));
    std::cout << "C components: " << cc.size() << ", C~ components: " << cct.size() << "\n";
    auto gc = genus(c.smooth);
    std::cout << "genus C:";
    for (int x : gc) std::cout << ' ' << x;
    auto gct = genus(ct.smooth);
    std::cout << "  genus C~:";
    for (int x : gct) std::cout << ' ' << x;
    std::cout << "\n";
    std::cout << "etale: " << (is_etale_double(s) ? "yes" : "no") << "\n";
    if (!t.pairs.empty()) {
        std::cout << "nodes on C~: " << t.pairs.size() << ", on C: " << c.pairs.size()
                  << "\n";
        std::cout << "p_a(C) = " << arithmetic_genus(c) << ", p_a(C~) = "
                  << arithmetic_genus(ct) << "\n";
        auto types = node_types(t);
        std::cout << "node types:";
        for (auto b : types) std::cout << ' ' << to_string(b);
        std::cout << "\n";
        auto a = is_allowable(t);
        std::cout << "allowable: " << (a.allowable ? "yes" : "no") << " (" << a.reason
                  << ")\n";
    }
    return 0;
}

void write_local_report(std::ostream& os, const std::string& construction,
                        const GluedTower& in) {
    os << "local pictures (" << construction << ")\n";
    for (std::size_t b = 0; b < in.smooth.branches.size(); ++b) {
        bool glued = false;
        for (const auto& pr : in.pairs)
            if (pr.a.label == static_cast<int>(b)) glued = true;
        LocalPictureTag tag =
            local_picture(construction, in.smooth.branches[b], glued);
        os << "  " << in.smooth.base.branch_labels[b] << ": case " << tag.case_id << " ["
           << tag.input << "] ->";
        for (const auto& o : tag.outputs) os << " [" << o << "]";
        os << "\n";
    }
}

int cmd_construct(const std::string& kind, const std::string& in_path,
                  const std::string& out_prefix) {
    TowerFile tf = load_tower_file(in_path);
    std::ostringstream report;
    if (kind == "trigonal-inverse") {
        if (!tf.cover || !tf.cover->pairs.empty())
            throw std::runtime_error(
                "trigonal-inverse expects a plain degree-4 cover file without nodes");
        GluedTower out = trigonal_inverse(tf.cover->smooth);
        write_tower_file(out_prefix + "-0.tower", render_tower(out));
        write_local_report(report, "trigonal", out);
        std::cout << report.str() << "wrote " << out_prefix << "-0.tower\n";
        return 0;
    }
    if (!tf.tower) throw std::runtime_error("construct expects a signed tower file");
    const GluedTower& in = *tf.tower;
    if (kind == "bigonal") {
        GluedTower out = bigonal(in);
        write_tower_file(out_prefix + "-0.tower", render_tower(out));
        write_local_report(report, "bigonal", in);
        std::cout << report.str() << "wrote " << out_prefix << "-0.tower\n";
        return 0;
    }
    if (kind == "trigonal") {
        MonodromyCover x = trigonal_forward(in);
        write_tower_file(out_prefix + "-0.tower", render_tower(x));
        write_local_report(report, "trigonal", in);
        std::cout << report.str() << "wrote " << out_prefix << "-0.tower\n";
        return 0;
    }
    if (kind == "tetragonal") {
        TetragonalPair p = tetragonal(in);
        write_tower_file(out_prefix + "-0.tower", render_tower(p.c0));
        write_tower_file(out_prefix + "-1.tower", render_tower(p.c1));
        write_local_report(report, "tetragonal", in);
        std::cout << report.str() << "wrote " << out_prefix << "-0.tower and "
                  << out_prefix << "-1.tower\n";
        return 0;
    }
    throw std::runtime_error("unknown construction kind '" + kind + "'");
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int cases) {
    SuiteConfig cfg;
    cfg.seed = seed;
    cfg.cases = cases;
    SuiteReport rep = run_suite(suite, cfg);
    std::cout << format_report(rep);
    std::cerr << "wall time " << rep.wall_seconds << " s\n";
    return rep.failed == 0 ? 0 : 1;
}

int cmd_lines(int blowups, bool nodal, bool segre, const std::string& dot_path) {
    PicLattice lat(blowups);
    auto ls = lines(lat);
    std::cout << "lines(" << blowups << ") = " << ls.size() << "\n";
    if (blowups == 5 || blowups == 6) {
        IncidenceGraph g = incidence_graph(lat);
        std::size_t edges = 0;
        for (const auto& adj : g.adjacency) edges += adj.size();
        std::cout << "incidence edges: " << edges / 2 << "\n";
        if (blowups == 6) {
            std::cout << "tritangents: " << tritangents(lat, ls).size() << "\n";
            std::cout << "double sixes: " << double_sixes(g).size() << "\n";
            WeylOrders w = weyl_orders(lat);
            std::cout << "weyl order: " << w.group_order
                      << ", line stabilizer: " << w.line_stabilizer_order << "\n";
        }
        if (!dot_path.empty()) {
            std::ofstream out(dot_path);
            if (!out) throw std::runtime_error("cannot write '" + dot_path + "'");
            out << to_dot(g, "lines");
            std::cout << "wrote " << dot_path << "\n";
        }
    }
    if (nodal) {
        auto ns = nodal_specialize();
        std::cout << "nodal structure: " << ns.names.size() << " objects (6 doubled + 15), "
                  << "quotient " << (ns.quotient_consistent ? "consistent" : "INCONSISTENT")
                  << "\n";
        for (std::size_t i = 0; i < ns.names.size(); ++i) {
            std::cout << "  " << ns.names[i] << ":";
            for (int j : ns.adjacency[i]) std::cout << ' ' << ns.names[j];
            std::cout << "\n";
        }
    }
    if (segre) {
        auto ss = segre_structure();
        std::cout << "segre cubic: " << ss.rulings.size() << " rulings, " << ss.planes.size()
                  << " planes\n";
        std::cout << "pentagon-type triples: " << ss.pentagon_triples.size()
                  << ", wheel-type triples: " << ss.wheel_triples.size() << "\n";
        std::cout << "pentagon: " << ss.pentagon_components << " rational components, "
                  << ss.pentagon_nodes << " nodes, p_a = " << ss.pentagon_pa << "\n";
        std::cout << "wheel: conic + 3 concurrent lines (dual graph only)\n";
    }
    return 0;
}

int cmd_f2(int genus, bool enumerate_theta) {
    if (!enumerate_theta) {
        std::cout << "nothing to do (use --enumerate-theta)\n";
        return 0;
    }
    if (genus < 1 || genus > 8) throw std::runtime_error("--genus must be in 1..8");
    // the standard basis is symplectic, so the Arf formula reads off bits
    long long even = 0, odd = 0;
    std::uint64_t total = 1ull << (2 * genus);
    for (std::uint64_t q = 0; q < total; ++q) {
        int a = 0;
        for (int i = 0; i < genus; ++i)
            a ^= static_cast<int>((q >> (2 * i)) & (q >> (2 * i + 1)) & 1);
        (a == 0 ? even : odd) += 1;
    }
    std::cout << "genus " << genus << ": theta characteristics " << total << " total, "
              << even << " even, " << odd << " odd\n";
    return 0;
}

int cmd_diagram(bool require_t) {
    auto sols = fano_solve(require_t);
    std::cout << "solutions=" << sols.size() << " orbit=" << fano_orbit_count(sols);
    if (require_t && !sols.empty()) {
        int t = 0, c = 0;
        for (int p = 0; p < 7; ++p)
            if (sols.front().vertex_labels[p] == VertexLabel::T) ++t;
        for (int l = 0; l < 7; ++l)
            if (sols.front().edge_labels[l] == EdgeLabel::C) ++c;
        std::cout << " labels=" << t << "T/" << 7 - t << "Q/" << c << "C";
    }
    std::cout << "\n";
    for (const auto& d : sols) std::cout << fano_render(d) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polygonal constructions on monodromy towers"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(0, 1);

    auto* cover_cmd = app.add_subcommand("cover", "inspect tower files");
    auto* info_cmd = cover_cmd->add_subcommand("info", "summarize a tower file");
    std::string info_path;
    info_cmd->add_option("file", info_path, "tower file")->required();

    auto* construct_cmd = app.add_subcommand("construct", "run a polygonal construction");
    std::string kind, in_path, out_prefix = "out";
    construct_cmd
        ->add_option("--kind", kind, "bigonal | trigonal | trigonal-inverse | tetragonal")
        ->required();
    construct_cmd->add_option("input", in_path, "input tower file")->required();
    construct_cmd->add_option("-o,--output", out_prefix, "output prefix");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::uint64_t seed = 1;
    int cases = 50;
    verify_cmd->add_option("--suite", suite, "suite name")->required();
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_option("--cases", cases, "number of randomized cases");

    auto* lines_cmd = app.add_subcommand("lines", "del Pezzo line census");
    int blowups = 6;
    bool nodal = false, segre = false;
    std::string dot_path;
    lines_cmd->add_option("--blowups", blowups, "number of blown-up points (0..6)");
    lines_cmd->add_flag("--nodal", nodal, "print the nodal-cubic incidence structure");
    lines_cmd->add_flag("--segre", segre, "print the Segre cubic bookkeeping");
    lines_cmd->add_option("--dot", dot_path, "write the incidence graph as DOT");

    auto* f2_cmd = app.add_subcommand("f2", "F2 quadratic form counts");
    int genus_opt = 2;
    bool enum_theta = false;
    f2_cmd->add_option("--genus", genus_opt, "genus g (dimension 2g)");
    f2_cmd->add_flag("--enumerate-theta", enum_theta, "count forms by parity");

    auto* diagram_cmd = app.add_subcommand("diagram", "Fano-plane labeling solver");
    bool fano = false, require_t = false;
    diagram_cmd->add_flag("--fano-solve", fano, "solve the T/Q/C labeling constraints");
    diagram_cmd->add_flag("--require-t", require_t, "demand at least one T-vertex");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*info_cmd) return cmd_info(info_path);
        if (*construct_cmd) return cmd_construct(kind, in_path, out_prefix);
        if (*verify_cmd) {
            if (!is_suite(suite)) {
                std::cerr << "unknown suite '" << suite << "'; available:";
                for (const auto& n : suite_names()) std::cerr << ' ' << n;
                std::cerr << "\n";
                return 2;
            }
            return cmd_verify(suite, seed, cases);
        }
        if (*lines_cmd) return cmd_lines(blowups, nodal, segre, dot_path);
        if (*f2_cmd) return cmd_f2(genus_opt, enum_theta);
        if (*diagram_cmd) {
            if (!fano) {
                std::cerr << "nothing to do (use --fano-solve)\n";
                return 2;
            }
            return cmd_diagram(require_t);
        }
        std::cout << app.help();
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
