#include "cli_common.hpp"
#include "gaugepoly/exact_cube.hpp"
#include "gaugepoly/exact_polygon.hpp"

namespace cli {

namespace {

int do_verify(const Options& opt, const std::string& path) {
    gp::ngon::NGon g = gp::io::ngon_from_json(load_json(path));
    auto rep = verify_ngon(g);
    if (opt.json()) {
        gp::io::json j;
        j["pass"] = rep.pass;
        gp::io::json items = gp::io::json::array();
        for (auto& it : rep.items)
            items.push_back({{"j", it.j}, {"l", it.l}, {"pass", it.pass}});
        j["identities"] = items;
        emit(j);
    } else {
        std::cout << rep.summary();
    }
    return rep.pass ? 0 : 1;
}

int do_total(const Options& opt, const std::string& path) {
    gp::ngon::NGon g = gp::io::ngon_from_json(load_json(path));
    auto tot = total_complex(g);
    std::size_t hdim = gp::ngon::flat_homology_dim(tot.D);
    if (opt.json()) {
        gp::io::json j;
        j["total_dimension"] = tot.D.cols();
        j["homology_dimension"] = hdim;
        j["acyclic"] = tot.acyclic;
        j["contraction_nilpotent"] = tot.dk_kd_nilpotent;
        emit(j);
    } else {
        std::cout << "total dimension " << tot.D.cols() << ", homology dimension " << hdim
                  << "\nacyclic: " << (tot.acyclic ? "yes" : "no")
                  << "\nDK+KD-1 nilpotent: " << (tot.dk_kd_nilpotent ? "yes" : "no") << "\n";
    }
    return (tot.acyclic && tot.dk_kd_nilpotent) ? 0 : 1;
}

int do_assemble(const Options& opt, const std::string& path, const std::string& out) {
    gp::ngon::NCube q = gp::io::cube_from_json(load_json(path));
    auto rep = verify_cube(q);
    if (!rep.pass) {
        std::cerr << rep.summary();
        return 1;
    }
    gp::ngon::NGon g = cube_to_polygon(q);
    gp::io::json j = gp::io::ngon_to_json(g);
    if (!out.empty()) {
        std::ofstream f(out);
        f << j.dump(2) << "\n";
        std::cout << "wrote " << out << "\n";
    } else {
        emit(j);
    }
    (void)opt;
    return verify_ngon(g).pass ? 0 : 1;
}

}  // namespace

void register_ngon(CLI::App& app, Options& opt) {
    auto* ngon = app.add_subcommand("ngon", "exact n-gon operations");
    ngon->require_subcommand(1);

    static std::string path;
    auto* verify = ngon->add_subcommand("verify", "check the defining identities");
    verify->add_option("file", path, "n-gon JSON file")->required();
    verify->callback([&]() { std::exit(do_verify(opt, path)); });

    static std::string tpath;
    auto* total = ngon->add_subcommand("total", "total complex, acyclicity, contraction");
    total->add_option("file", tpath, "n-gon JSON file")->required();
    total->callback([&]() { std::exit(do_total(opt, tpath)); });

    auto* cube = app.add_subcommand("cube", "exact n-cube operations");
    cube->require_subcommand(1);
    static std::string cpath, cout_path;
    auto* assemble = cube->add_subcommand("assemble", "verify a cube and emit its (n+1)-gon");
    assemble->add_option("file", cpath, "n-cube JSON file")->required();
    assemble->add_option("-o,--output", cout_path, "output n-gon JSON path");
    assemble->callback([&]() { std::exit(do_assemble(opt, cpath, cout_path)); });
}

}  // namespace cli
