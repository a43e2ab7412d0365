#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "gaugepoly/json_io.hpp"

namespace cli {

struct Options {
    std::string format = "text";  // text | json
    unsigned long seed = 1;
    long window = 2;
    double tolerance = 1e-6;
    int samples = 1000;

    bool json() const { return format == "json"; }
};

inline gp::io::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    gp::io::json j;
    in >> j;
    return j;
}

inline void emit(const gp::io::json& j) { std::cout << j.dump(2) << "\n"; }

void register_ngon(CLI::App& app, Options& opt);
void register_assoc(CLI::App& app, Options& opt);
void register_lattice(CLI::App& app, Options& opt);
void register_index(CLI::App& app, Options& opt);
void register_hol(CLI::App& app, Options& opt);
void register_gh(CLI::App& app, Options& opt);

}  // namespace cli
