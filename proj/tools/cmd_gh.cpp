#include <cmath>
#include <random>

#include "cli_common.hpp"
#include "gaugepoly/gibbons_hawking.hpp"

namespace cli {

namespace {

int do_check(const Options& opt, const std::string& path, double h) {
    gp::gh::MonopoleConfig cfg = gp::io::gh_config_from_json(load_json(path));
    std::mt19937 rng(opt.seed);
    std::uniform_real_distribution<double> bx(cfg.centers.front() - 1.5,
                                              cfg.centers.back() + 1.5);
    std::uniform_real_distribution<double> byz(-1.5, 1.5);
    auto sample = [&](double clearance) {
        while (true) {
            gp::gh::Vec3 q{bx(rng), byz(rng), byz(rng)};
            bool ok = true;
            for (int i = 1; i <= cfg.n(); ++i) {
                auto c = cfg.center(i);
                if (std::hypot(q[0] - c[0], q[1] - c[1], q[2] - c[2]) < clearance) ok = false;
            }
            if (ok) return q;
        }
    };

    double max_lap = 0, max_mono = 0, min_order_lap = 99, min_order_mono = 99, min_R = 1e300;
    int lap_measured = 0, mono_measured = 0;
    for (int s = 0; s < opt.samples; ++s) {
        auto q = sample(0.4);
        double l1 = std::fabs(gp::gh::laplacian_fd(cfg, q, h));
        double l2 = std::fabs(gp::gh::laplacian_fd(cfg, q, h / 2));
        max_lap = std::max(max_lap, l1);
        if (l1 > 1e-6) {
            ++lap_measured;
            min_order_lap = std::min(min_order_lap, std::log2(l1 / l2));
        }
        bool off_axis = true;
        for (int i = 1; i <= cfg.n(); ++i) {
            double dx = q[0] - cfg.center(i)[0];
            if (dx * dx + q[1] * q[1] < 0.25) off_axis = false;
        }
        if (off_axis) {
            double m1 = gp::gh::monopole_equation_residual_fd(cfg, q, h / 100);
            double m2 = gp::gh::monopole_equation_residual_fd(cfg, q, h / 200);
            max_mono = std::max(max_mono, m1);
            if (m1 > 1e-7) {
                ++mono_measured;
                min_order_mono = std::min(min_order_mono, std::log2(m1 / m2));
            }
        }
        min_R = std::min(min_R, gp::gh::scalar_curvature(cfg, q));
    }

    bool flux_ok = true;
    gp::io::json fluxes = gp::io::json::array();
    for (int i = 1; i <= cfg.n(); ++i) {
        double r = 0.2 * cfg.min_separation();
        double f = gp::gh::sphere_flux(cfg, i, r);
        double want = 4 * M_PI * double(cfg.charge(i));
        bool ok = std::fabs(f - want) <= opt.tolerance * std::fabs(want);
        flux_ok = flux_ok && ok;
        fluxes.push_back({{"center", i}, {"flux", f}, {"expected", want}, {"ok", ok}});
    }

    bool pass = flux_ok && min_R > 0 && (lap_measured == 0 || min_order_lap >= 1.9) &&
                (mono_measured == 0 || min_order_mono >= 1.9);

    gp::io::json j;
    j["samples"] = opt.samples;
    j["h"] = h;
    j["max_laplacian_residual"] = max_lap;
    j["min_laplacian_order"] = lap_measured ? min_order_lap : -1;
    j["max_monopole_residual"] = max_mono;
    j["min_monopole_order"] = mono_measured ? min_order_mono : -1;
    j["min_scalar_curvature"] = min_R;
    j["fluxes"] = fluxes;
    j["pass"] = pass;
    if (opt.json()) {
        emit(j);
    } else {
        std::cout << "laplacian residual max " << max_lap << " (order >= "
                  << (lap_measured ? min_order_lap : -1) << ")\n"
                  << "monopole equation residual max " << max_mono << " (order >= "
                  << (mono_measured ? min_order_mono : -1) << ")\n"
                  << "min scalar curvature " << min_R << "\n"
                  << "flux quantization " << (flux_ok ? "ok" : "FAILED") << "\n"
                  << (pass ? "pass" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

}  // namespace

void register_gh(CLI::App& app, Options& opt) {
    auto* ghc = app.add_subcommand("gh", "multi-center monopole geometry checks");
    ghc->require_subcommand(1);

    static std::string path;
    static double h = 1e-2;
    auto* check = ghc->add_subcommand("check", "residual and quantization report");
    check->set_help_flag("--help", "print help");
    check->add_option("--config", path, "monopole configuration JSON file")->required();
    check->add_option("--h", h, "base finite-difference step");
    check->callback([&]() { std::exit(do_check(opt, path, h)); });
}

}  // namespace cli
