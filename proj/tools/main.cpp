// gaugepoly: exact homological algebra, associahedron combinatorics, weight
// lattice reduction, instanton index tables, and Gibbons-Hawking numerics in
// one command line tool.

#include "cli_common.hpp"

int main(int argc, char** argv) {
    CLI::App app{"surgery-polygon toolkit: exact polygons over GF(2), associahedra, "
                 "su(N) weight lattices, completely reducible index tables, and "
                 "multi-center monopole checks"};
    app.require_subcommand(1);

    cli::Options opt;
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("GAUGEPOLY_FORMAT");
    app.add_option("--seed", opt.seed, "seed for randomized checks")->envname("GAUGEPOLY_SEED");
    app.add_option("--window", opt.window, "search window for decompositions")
        ->envname("GAUGEPOLY_WINDOW");
    app.add_option("--tolerance", opt.tolerance, "numeric tolerance for float checks")
        ->envname("GAUGEPOLY_TOLERANCE");
    app.add_option("--samples", opt.samples, "sample count for numeric checks")
        ->envname("GAUGEPOLY_SAMPLES");

    cli::register_ngon(app, opt);
    cli::register_assoc(app, opt);
    cli::register_lattice(app, opt);
    cli::register_index(app, opt);
    cli::register_hol(app, opt);
    cli::register_gh(app, opt);

    // allow the global flags to appear after any subcommand
    auto set_fallthrough = [](CLI::App* a, auto&& self) -> void {
        a->fallthrough();
        for (CLI::App* sub : a->get_subcommands({})) self(sub, self);
    };
    set_fallthrough(&app, set_fallthrough);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
