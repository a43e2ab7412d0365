#include <sstream>

#include "cli_common.hpp"
#include "gaugepoly/decomposition_tables.hpp"

namespace cli {

namespace {

std::vector<long> parse_longs(const std::string& csv) {
    std::vector<long> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stol(tok));
    return out;
}

gp::io::json row_json(const gp::charges::TableCheckRow& r) {
    gp::io::json e;
    e["v"] = r.v;
    e["s"] = r.s;
    gp::io::json ws = gp::io::json::array();
    for (auto& w : r.w_found) ws.push_back(w);
    e["w"] = ws;
    e["kappa"] = gp::rat_str(r.kappa_found);
    e["kappa_expected"] = gp::rat_str(r.kappa_expected);
    e["kappa_ok"] = r.kappa_ok;
    if (r.ind_expected) {
        e["ind_plus_h0"] = *r.ind_found;
        e["ind_plus_h0_expected"] = *r.ind_expected;
        e["ind_ok"] = r.ind_ok;
    }
    return e;
}

int do_tables(const Options& opt) {
    auto checks = gp::charges::regenerate_tables(opt.window, true);
    bool pass = true;
    if (opt.json()) {
        gp::io::json j = gp::io::json::array();
        for (auto& t : checks) {
            gp::io::json tj;
            tj["name"] = t.name;
            tj["N"] = t.N;
            tj["k"] = t.k;
            tj["pass"] = t.pass;
            gp::io::json rows = gp::io::json::array();
            for (auto& r : t.rows) rows.push_back(row_json(r));
            tj["rows"] = rows;
            j.push_back(tj);
            pass = pass && t.pass;
        }
        emit(j);
    } else {
        for (auto& t : checks) {
            std::cout << gp::charges::format_table_text(t) << "\n";
            pass = pass && t.pass;
        }
        std::cout << (pass ? "all tables reproduced" : "TABLE MISMATCH") << "\n";
    }
    return pass ? 0 : 1;
}

int do_search(const Options& opt, const std::string& vcsv, const std::string& scsv, int N,
              int k) {
    auto v = parse_longs(vcsv);
    auto s = parse_longs(scsv);
    if (N == 0) N = int(v.size());
    if (k == 0) k = int(s.size());
    auto row = gp::charges::nice_decomposition_search(v, s, N, k, opt.window, true);
    if (!row) {
        std::cerr << "no decomposition inside the window\n";
        return 1;
    }
    if (opt.json()) {
        gp::io::json j;
        j["v"] = row->v;
        j["s"] = row->s;
        gp::io::json ws = gp::io::json::array();
        for (auto& w : row->w) ws.push_back(w);
        j["w"] = ws;
        j["kappa"] = gp::rat_str(row->kappa);
        j["ind_plus_h0"] = *row->ind_plus_h0;
        emit(j);
    } else {
        std::cout << "kappa = " << gp::rat_str(row->kappa)
                  << ", ind+h0 = " << *row->ind_plus_h0 << "\nw =";
        for (auto& w : row->w) {
            std::cout << " (";
            for (std::size_t i = 0; i < w.size(); ++i) std::cout << (i ? "," : "") << w[i];
            std::cout << ")";
        }
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

void register_index(CLI::App& app, Options& opt) {
    auto* index = app.add_subcommand("index", "completely reducible index bookkeeping");
    index->require_subcommand(1);

    auto* tables = index->add_subcommand("tables", "regenerate the decomposition tables");
    tables->callback([&]() { std::exit(do_tables(opt)); });

    static std::string vcsv, scsv;
    static int N = 0, k = 0;
    auto* search = index->add_subcommand("search", "search a minimizing decomposition");
    search->add_option("--v", vcsv, "total class, comma separated")->required();
    search->add_option("--s", scsv, "target lens exponents, comma separated")->required();
    search->add_option("--N", N, "rank (defaults to the length of --v)");
    search->add_option("--k", k, "summand count (defaults to the length of --s)");
    search->callback([&]() { std::exit(do_search(opt, vcsv, scsv, N, k)); });
}

}  // namespace cli
