#include <sstream>

#include "cli_common.hpp"
#include "gaugepoly/holonomy_map.hpp"

namespace cli {

namespace {

std::vector<int> parse_ints(const std::string& csv) {
    std::vector<int> out;
    if (csv.empty()) return out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

int do_vertices(const Options& opt, int N, int l, const std::string& sigma,
                const std::string& tau) {
    gp::charges::BiPermutation b;
    b.N = N;
    b.l = l;
    b.sigma = parse_ints(sigma);
    b.tau = parse_ints(tau);
    b.validate();
    gp::io::json out = gp::io::json::array();
    for (int k = 0; k < N; ++k) {
        auto vi = gp::hol::vertex_image(b, k);
        if (opt.json()) {
            gp::io::json e;
            e["k"] = k;
            gp::io::json th = gp::io::json::array(), tb = gp::io::json::array(),
                         rr = gp::io::json::array();
            for (auto& x : vi.theta) th.push_back(gp::rat_str(x));
            for (auto& x : vi.theta_bar.t) tb.push_back(gp::rat_str(x));
            for (auto& x : vi.r) rr.push_back(gp::rat_str(x));
            e["theta"] = th;
            e["theta_bar"] = tb;
            e["r"] = rr;
            out.push_back(e);
        } else {
            std::cout << "u_" << k << ": theta_bar =";
            for (auto& x : vi.theta_bar.t) std::cout << " " << gp::rat_str(x);
            std::cout << "  (r:";
            for (auto& x : vi.r) std::cout << " " << gp::rat_str(x);
            std::cout << ")\n";
        }
    }
    if (opt.json()) emit(out);
    auto rep = gp::hol::vertex_discrepancy_report();
    if (N == 2 && l == 0 && !opt.json())
        std::cout << "note: " << rep.note << "\n";
    return 0;
}

int do_degree(const Options& opt, int N, int l, const std::string& tstr) {
    gp::charges::BiPermutation b;
    b.N = N;
    b.l = l;
    for (int i = 0; i < N - l; ++i) b.sigma.push_back(i);
    for (int j = 0; j < l; ++j) b.tau.push_back(N - l + j);
    gp::Rat t = gp::parse_rat(tstr);
    auto m = gp::hol::build_Ht(b, t);
    // target: image of the identity cell's barycenter under the map
    gp::RatVec target(N, gp::Rat(0));
    for (int v = 0; v < N; ++v)
        for (int c = 0; c < N; ++c) target[c] += m.images[0][v][c] / N;
    bool interior = true;
    for (auto& x : target) interior = interior && (x > 0);
    if (!interior) {
        std::cerr << "the natural target is not interior; pass a different t\n";
        return 1;
    }
    auto rep = gp::hol::degree_mod2(m, target);
    if (opt.json()) {
        gp::io::json j;
        j["t"] = gp::rat_str(t);
        j["parity"] = rep.parity;
        j["covering_cells"] = rep.covering_cells;
        j["skipped_degenerate"] = rep.skipped_degenerate;
        j["faces_agree"] = m.faces_agree;
        j["perturbed_target"] = rep.perturbed;
        emit(j);
    } else {
        std::cout << "degree mod 2 = " << rep.parity << " (" << rep.covering_cells
                  << " covering cells, " << rep.skipped_degenerate << " degenerate skipped)\n";
        if (!m.faces_agree) std::cout << "note: " << m.face_note << "\n";
    }
    return 0;
}

}  // namespace

void register_hol(CLI::App& app, Options& opt) {
    auto* hol = app.add_subcommand("hol", "vertex holonomy formulas and degree counting");
    hol->require_subcommand(1);

    static int N = 2, l = 0;
    static std::string sigma, tau;
    auto* vertices = hol->add_subcommand("vertices", "vertex images of a bi-permutation");
    vertices->add_option("--N", N, "rank")->required();
    vertices->add_option("--l", l, "type")->required();
    vertices->add_option("--sigma", sigma, "comma-separated injection values");
    vertices->add_option("--tau", tau, "comma-separated injection values");
    vertices->callback([&]() { std::exit(do_vertices(opt, N, l, sigma, tau)); });

    static int dN = 2, dl = 0;
    static std::string tval{"1"};
    auto* degree = hol->add_subcommand("degree", "mod-2 degree of the interpolated map");
    degree->add_option("--N", dN, "rank")->required();
    degree->add_option("--l", dl, "type")->required();
    degree->add_option("--t", tval, "interpolation parameter in [0,1], rational");
    degree->callback([&]() { std::exit(do_degree(opt, dN, dl, tval)); });
}

}  // namespace cli
