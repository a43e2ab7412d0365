#include <sstream>

#include "cli_common.hpp"
#include "gaugepoly/weight_lattice.hpp"

namespace cli {

namespace {

gp::RatVec parse_rat_list(const std::string& csv) {
    gp::RatVec out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(gp::parse_rat(tok));
    return out;
}

std::vector<long> parse_long_list(const std::string& csv) {
    std::vector<long> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stol(tok));
    return out;
}

int do_reduce(const Options& opt, int N, const std::string& tcsv) {
    gp::RatVec v = parse_rat_list(tcsv);
    if (N > 0 && int(v.size()) != N)
        throw CLI::ValidationError("vector length does not match --N");
    gp::weyl::WeightVector t = gp::weyl::normalize(v);
    auto red = gp::weyl::reduce_to_fundamental_domain(t);
    if (opt.json()) {
        gp::io::json j;
        gp::io::json tv = gp::io::json::array(), rv = gp::io::json::array(),
                     rc = gp::io::json::array();
        for (auto& x : t.t) tv.push_back(gp::rat_str(x));
        for (auto& x : red.reduced.t) rv.push_back(gp::rat_str(x));
        for (auto& x : gp::weyl::r_coords(red.reduced)) rc.push_back(gp::rat_str(x));
        j["normalized_input"] = tv;
        j["reduced"] = rv;
        j["r_coordinates"] = rc;
        j["permutation"] = red.permutation;
        j["lattice_vector"] = red.lattice;
        emit(j);
    } else {
        std::cout << "reduced point:";
        for (auto& x : red.reduced.t) std::cout << " " << gp::rat_str(x);
        std::cout << "\nr-coordinates:";
        for (auto& x : gp::weyl::r_coords(red.reduced)) std::cout << " " << gp::rat_str(x);
        std::cout << "\nlattice shift:";
        for (long k : red.lattice) std::cout << " " << k;
        std::cout << "\n";
    }
    return 0;
}

int do_h0(const Options& opt, int lens_p, const std::string& exps, const std::string& tcsv) {
    long h0 = 0;
    std::string kind;
    if (lens_p > 0) {
        gp::weyl::LensFlatConnection chi;
        chi.p = lens_p;
        chi.exponents = parse_long_list(exps);
        h0 = gp::weyl::h0_lens(chi);
        kind = "lens";
    } else {
        gp::weyl::TorusFlatConnection beta;
        beta.point = gp::weyl::normalize(parse_rat_list(tcsv));
        auto red = gp::weyl::reduce_to_fundamental_domain(beta.point);
        beta.point = red.reduced;
        h0 = gp::weyl::h0_s1s2(beta);
        kind = "torus";
    }
    if (opt.json()) {
        emit({{"kind", kind}, {"h0", h0}});
    } else {
        std::cout << "h0 = " << h0 << "\n";
    }
    return 0;
}

}  // namespace

void register_lattice(CLI::App& app, Options& opt) {
    auto* lattice = app.add_subcommand("lattice", "weight lattice of su(N)");
    lattice->require_subcommand(1);

    static int N = 0;
    static std::string tcsv;
    auto* reduce = lattice->add_subcommand("reduce", "reduce to the fundamental domain");
    reduce->add_option("--N", N, "rank (optional cross-check)");
    reduce->add_option("--t", tcsv, "comma-separated rationals, e.g. 13/10,-2/5,-9/10")
        ->required();
    reduce->callback([&]() { std::exit(do_reduce(opt, N, tcsv)); });

    static int lens_p = 0;
    static std::string exps, beta;
    auto* h0 = lattice->add_subcommand("h0", "h^0 of a flat connection");
    h0->add_option("--lens", lens_p, "lens space order p (use with --exponents)");
    h0->add_option("--exponents", exps, "comma-separated exponents of the U(1) summands");
    h0->add_option("--t", beta, "torus holonomy point (comma-separated rationals)");
    h0->callback([&]() { std::exit(do_h0(opt, lens_p, exps, beta)); });
}

}  // namespace cli
