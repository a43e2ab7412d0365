#include "gaugepoly/json_io.hpp"

#include <stdexcept>

namespace gp::io {

json matrix_to_json(const f2::Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row_string(r));
    return rows;
}

f2::Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
    std::vector<std::string> rs;
    for (const auto& r : j) rs.push_back(r.get<std::string>());
    if (rs.size() != rows) throw std::invalid_argument("matrix row count mismatch");
    return f2::Matrix::from_rows(rs, cols);
}

json complex_to_json(const f2::ChainComplex& c) {
    json j;
    j["grading"] = (c.grading() == f2::Grading::Mod2) ? "mod2" : "integer";
    json spaces = json::object();
    for (int d : c.degrees()) spaces[std::to_string(d)] = c.dim(d);
    j["spaces"] = spaces;
    json diffs = json::object();
    for (int d : c.degrees()) {
        f2::Matrix m = c.diff(d);
        if (!m.is_zero()) diffs[std::to_string(d)] = matrix_to_json(m);
    }
    j["differentials"] = diffs;
    return j;
}

f2::ChainComplex complex_from_json(const json& j) {
    f2::Grading g = (j.at("grading").get<std::string>() == "mod2") ? f2::Grading::Mod2
                                                                   : f2::Grading::Integer;
    std::map<int, std::size_t> dims;
    for (auto it = j.at("spaces").begin(); it != j.at("spaces").end(); ++it)
        dims[std::stoi(it.key())] = it.value().get<std::size_t>();
    auto dim_of = [&](int d) {
        if (g == f2::Grading::Mod2) d = ((d % 2) + 2) % 2;
        auto it = dims.find(d);
        return it == dims.end() ? std::size_t(0) : it->second;
    };
    std::map<int, f2::Matrix> diffs;
    if (j.contains("differentials")) {
        for (auto it = j.at("differentials").begin(); it != j.at("differentials").end(); ++it) {
            int d = std::stoi(it.key());
            int below = (g == f2::Grading::Mod2) ? (((d - 1) % 2) + 2) % 2 : d - 1;
            diffs[d] = matrix_from_json(it.value(), dim_of(below), dim_of(d));
        }
    }
    f2::ChainComplex c(g, dims, diffs);
    c.validate();
    return c;
}

json chainmap_to_json(const f2::ChainMap& f) {
    json j;
    j["source"] = complex_to_json(f.source());
    j["target"] = complex_to_json(f.target());
    j["degree_shift"] = f.degree_shift();
    json blocks = json::object();
    for (int d : f.source().degrees()) {
        f2::Matrix b = f.block(d);
        if (!b.is_zero()) blocks[std::to_string(d)] = matrix_to_json(b);
    }
    j["blocks"] = blocks;
    return j;
}

f2::ChainMap chainmap_from_json(const json& j) {
    f2::ChainComplex src = complex_from_json(j.at("source"));
    f2::ChainComplex tgt = complex_from_json(j.at("target"));
    int shift = j.at("degree_shift").get<int>();
    std::map<int, f2::Matrix> blocks;
    if (j.contains("blocks")) {
        for (auto it = j.at("blocks").begin(); it != j.at("blocks").end(); ++it) {
            int d = std::stoi(it.key());
            blocks[d] = matrix_from_json(it.value(), tgt.dim(tgt.shift_deg(d, shift)), src.dim(d));
        }
    }
    return f2::ChainMap(std::move(src), std::move(tgt), shift, std::move(blocks));
}

json ngon_to_json(const ngon::NGon& g) {
    json j;
    j["n"] = g.n();
    json cs = json::array();
    for (int i = 0; i < g.n(); ++i) cs.push_back(complex_to_json(g.complex(i)));
    j["complexes"] = cs;
    json maps = json::array();
    for (int a = 0; a < g.n(); ++a) {
        for (int k = a + 1; k <= a + g.n(); ++k) {
            f2::Matrix m = g.map_at(a, k);
            if (m.is_zero()) continue;
            json e;
            e["j"] = a;
            e["k"] = k;
            if (g.has_declared_degree(a, k)) e["degree"] = g.declared_degree(a, k);
            e["matrix"] = matrix_to_json(m);
            maps.push_back(e);
        }
    }
    j["maps"] = maps;
    return j;
}

ngon::NGon ngon_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<f2::ChainComplex> cs;
    for (const auto& c : j.at("complexes")) cs.push_back(complex_from_json(c));
    ngon::NGon g(n, std::move(cs));
    if (j.contains("maps")) {
        for (const auto& e : j.at("maps")) {
            int a = e.at("j").get<int>();
            int k = e.at("k").get<int>();
            g.set_map(a, k, matrix_from_json(e.at("matrix"), g.cdim(k), g.cdim(a)));
            if (e.contains("degree")) g.set_map_degree(a, k, e.at("degree").get<int>());
        }
    }
    return g;
}

json cube_to_json(const ngon::NCube& q) {
    json j;
    j["n"] = q.n();
    json cs = json::array();
    for (uint32_t mask = 0; mask < (1u << q.n()); ++mask)
        cs.push_back(complex_to_json(q.complex(mask)));
    j["complexes"] = cs;
    json maps = json::array();
    for (uint32_t S = 0; S < (1u << q.n()); ++S) {
        for (uint32_t T = 0; T < (1u << q.n()); ++T) {
            for (const auto& path : ngon::enumerate_paths(q.n(), S, T, q.n() + 1)) {
                f2::Matrix m = q.path_map(path);
                if (m.is_zero()) continue;
                json e;
                e["through"] = path.through;
                e["start"] = path.start;
                e["sigma"] = path.sigma;
                e["tau"] = path.tau;
                e["matrix"] = matrix_to_json(m);
                maps.push_back(e);
            }
        }
    }
    j["path_maps"] = maps;
    return j;
}

ngon::NCube cube_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<f2::ChainComplex> cs;
    for (const auto& c : j.at("complexes")) cs.push_back(complex_from_json(c));
    ngon::NCube q(n, std::move(cs));
    if (j.contains("path_maps")) {
        for (const auto& e : j.at("path_maps")) {
            ngon::GnPath path;
            path.through = e.at("through").get<bool>();
            path.start = e.at("start").get<uint32_t>();
            path.sigma = e.at("sigma").get<std::vector<int>>();
            path.tau = e.at("tau").get<std::vector<int>>();
            q.set_path_map(path, matrix_from_json(e.at("matrix"), q.cdim(path.end(n)),
                                                  q.cdim(path.start)));
        }
    }
    return q;
}

namespace {
json tree_node_to_json(const assoc::RibbonTree& t, int v) {
    json arr = json::array();
    for (const auto& c : t.children(v)) {
        if (c.is_leaf)
            arr.push_back(c.index);
        else
            arr.push_back(tree_node_to_json(t, c.index));
    }
    return arr;
}

void tree_node_from_json(const json& j, std::vector<std::vector<assoc::RibbonTree::Child>>& out,
                         int my, int& next_leaf) {
    for (const auto& kid : j) {
        if (kid.is_array()) {
            int idx = int(out.size());
            out.emplace_back();
            out[my].push_back({false, idx});
            tree_node_from_json(kid, out, idx, next_leaf);
        } else {
            out[my].push_back({true, next_leaf++});
        }
    }
}
}  // namespace

json tree_to_json(const assoc::RibbonTree& t) { return tree_node_to_json(t, 0); }

assoc::RibbonTree tree_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("tree must be a nested list");
    std::vector<std::vector<assoc::RibbonTree::Child>> children(1);
    int next_leaf = 0;
    tree_node_from_json(j, children, 0, next_leaf);
    return assoc::RibbonTree::from_children(std::move(children));
}

json arrangement_to_json(const assoc::Arrangement& a) {
    json arr = json::array();
    for (const Rat& x : a.x) arr.push_back(rat_str(x));
    return arr;
}

assoc::Arrangement arrangement_from_json(const json& j) {
    assoc::Arrangement a;
    for (const auto& x : j) a.x.push_back(parse_rat(x.get<std::string>()));
    a.validate();
    return a;
}

json kpoint_to_json(const assoc::KPoint& p) {
    json j;
    j["tree"] = tree_to_json(p.tree);
    json arrs = json::array();
    for (const auto& a : p.vertex_arrangements) arrs.push_back(arrangement_to_json(a));
    j["arrangements"] = arrs;
    json scales = json::array();
    for (const auto& s : p.neck_scales) {
        if (s)
            scales.push_back(rat_str(*s));
        else
            scales.push_back(nullptr);
    }
    j["scales"] = scales;
    j["rho0"] = rat_str(p.rho0);
    return j;
}

assoc::KPoint kpoint_from_json(const json& j) {
    assoc::KPoint p;
    p.tree = tree_from_json(j.at("tree"));
    for (const auto& a : j.at("arrangements"))
        p.vertex_arrangements.push_back(arrangement_from_json(a));
    for (const auto& s : j.at("scales")) {
        if (s.is_null())
            p.neck_scales.push_back(std::nullopt);
        else
            p.neck_scales.push_back(parse_rat(s.get<std::string>()));
    }
    if (j.contains("rho0")) p.rho0 = parse_rat(j.at("rho0").get<std::string>());
    p.validate();
    return p;
}

json gh_config_to_json(const gh::MonopoleConfig& cfg) {
    json j;
    j["m"] = cfg.m;
    j["centers"] = cfg.centers;
    return j;
}

gh::MonopoleConfig gh_config_from_json(const json& j) {
    gh::MonopoleConfig cfg;
    cfg.m = j.at("m").get<std::vector<long>>();
    cfg.centers = j.at("centers").get<std::vector<double>>();
    cfg.validate();
    return cfg;
}

}  // namespace gp::io
