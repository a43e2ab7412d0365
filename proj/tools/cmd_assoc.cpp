#include "cli_common.hpp"
#include "gaugepoly/arrangement.hpp"
#include "gaugepoly/ribbon_tree.hpp"

namespace cli {

namespace {

int do_faces(const Options& opt, int n) {
    auto lat = gp::assoc::face_lattice(n);
    if (opt.json()) {
        gp::io::json j;
        j["n"] = n;
        j["face_count"] = lat.faces.size();
        j["vertex_count"] = lat.vertex_count;
        j["facet_count"] = lat.facet_count;
        j["euler_alternating_sum"] = lat.euler_characteristic_alt;
        gp::io::json faces = gp::io::json::array();
        for (std::size_t i = 0; i < lat.faces.size(); ++i) {
            gp::io::json f;
            f["tree"] = gp::io::tree_to_json(lat.faces[i]);
            f["codim"] = lat.codim[i];
            f["product_factors"] = lat.product_factors(int(i));
            faces.push_back(f);
        }
        j["faces"] = faces;
        emit(j);
    } else {
        std::cout << "associahedron on " << n << " leaves: " << lat.faces.size() << " faces, "
                  << lat.vertex_count << " vertices, " << lat.facet_count << " facets\n";
        for (std::size_t i = 0; i < lat.faces.size(); ++i)
            std::cout << "  codim " << lat.codim[i] << "  " << lat.faces[i].encode() << "\n";
    }
    return 0;
}

int do_glue(const Options& opt, const std::string& path) {
    gp::assoc::KPoint p = gp::io::kpoint_from_json(load_json(path));
    auto res = glue_arrangements(p);
    auto ad = annular_decomposition(p);
    if (opt.json()) {
        gp::io::json j;
        j["boundary"] = res.boundary;
        j["merged"] = gp::io::arrangement_to_json(res.merged);
        gp::io::json necks = gp::io::json::array();
        for (auto& nk : ad.necks) {
            gp::io::json e;
            e["edge"] = nk.edge;
            e["infinite"] = nk.infinite;
            e["center"] = gp::rat_str(nk.center);
            e["inner"] = gp::rat_str(nk.inner);
            e["outer"] = gp::rat_str(nk.outer);
            necks.push_back(e);
        }
        j["necks"] = necks;
        j["decomposition_consistent"] = ad.consistent;
        emit(j);
    } else {
        std::cout << (res.boundary ? "face point (infinite parameter), root arrangement:\n"
                                   : "merged arrangement:\n");
        for (const auto& x : res.merged.x) std::cout << "  " << gp::rat_str(x) << "\n";
        std::cout << "annular decomposition " << (ad.consistent ? "consistent" : "INCONSISTENT")
                  << ", " << ad.necks.size() << " neck(s)\n";
    }
    return ad.consistent ? 0 : 1;
}

}  // namespace

void register_assoc(CLI::App& app, Options& opt) {
    auto* assoc = app.add_subcommand("assoc", "associahedron combinatorics");
    assoc->require_subcommand(1);

    static int n = 4;
    auto* faces = assoc->add_subcommand("faces", "face lattice of the associahedron");
    faces->add_option("n", n, "number of marked points (2..10)")->required();
    faces->callback([&]() { std::exit(do_faces(opt, n)); });

    static std::string path;
    auto* glue = assoc->add_subcommand("glue", "glue a chart point and report the decomposition");
    glue->add_option("file", path, "chart point JSON file")->required();
    glue->callback([&]() { std::exit(do_glue(opt, path)); });
}

}  // namespace cli
