#include <doctest.h>

#include <stdexcept>

#include <random>

#include "gaugepoly/json_io.hpp"

using namespace gp;

TEST_CASE("complex round trip preserves homology and validates") {
    std::mt19937 rng(202);
    for (int trial = 0; trial < 40; ++trial) {
        f2::ChainComplex c = ngon::random_mod2_complex(rng, 6);
        io::json j = io::complex_to_json(c);
        f2::ChainComplex back = io::complex_from_json(j);
        CHECK(back.homology() == c.homology());
        CHECK(back.total_dim() == c.total_dim());
        // determinism of the serialized form
        CHECK(io::complex_to_json(back).dump() == j.dump());
    }
}

TEST_CASE("chain map round trip") {
    std::mt19937 rng(209);
    for (int trial = 0; trial < 20; ++trial) {
        f2::ChainComplex a = ngon::random_mod2_complex(rng, 5);
        f2::ChainComplex b = ngon::random_mod2_complex(rng, 5);
        f2::ChainMap f = ngon::random_chain_map(rng, a, b);
        io::json j = io::chainmap_to_json(f);
        f2::ChainMap back = io::chainmap_from_json(j);
        CHECK(back.is_chain_map());
        CHECK(back.flat() == f.flat());
        CHECK(io::chainmap_to_json(back).dump() == j.dump());
    }
}

TEST_CASE("n-gon round trip preserves verification") {
    ngon::NGon g = ngon::two_periodic_fourgon();
    io::json j = io::ngon_to_json(g);
    ngon::NGon back = io::ngon_from_json(j);
    CHECK(verify_ngon(back).pass);
    CHECK(euler_check(back));
    CHECK(io::ngon_to_json(back).dump() == j.dump());
}

TEST_CASE("cube round trip preserves verification") {
    std::mt19937 rng(203);
    f2::ChainComplex a = ngon::random_mod2_complex(rng, 4);
    f2::ChainComplex b = ngon::random_mod2_complex(rng, 4);
    ngon::NCube q = ngon::cone_two_cube(ngon::random_chain_map(rng, a, b));
    io::json j = io::cube_to_json(q);
    ngon::NCube back = io::cube_from_json(j);
    CHECK(verify_cube(back).pass);
    CHECK(io::cube_to_json(back).dump() == j.dump());
}

TEST_CASE("tree and arrangement round trips") {
    assoc::RibbonTree t = assoc::RibbonTree::parse("((0,1),2,(3,(4,5)))");
    io::json j = io::tree_to_json(t);
    CHECK(io::tree_from_json(j) == t);

    assoc::Arrangement a{{parse_rat("-1/3"), parse_rat("0"), parse_rat("7/2")}};
    io::json ja = io::arrangement_to_json(a);
    CHECK(io::arrangement_from_json(ja).x == a.x);
    CHECK(ja[0].get<std::string>() == "-1/3");

    assoc::KPoint p;
    p.tree = assoc::RibbonTree::parse("(0,(1,2))");
    p.vertex_arrangements = {assoc::Arrangement{{Rat(0), Rat(1)}},
                             assoc::Arrangement{{Rat(0), Rat(1)}}};
    p.neck_scales = {Rat(1, 32)};
    io::json jp = io::kpoint_to_json(p);
    assoc::KPoint back = io::kpoint_from_json(jp);
    CHECK(back.tree == p.tree);
    CHECK(back.neck_scales[0] == p.neck_scales[0]);

    gh::MonopoleConfig cfg;
    cfg.m = {0, 1, 3};
    cfg.centers = {0.0, 2.5};
    io::json jg = io::gh_config_to_json(cfg);
    auto cback = io::gh_config_from_json(jg);
    CHECK(cback.m == cfg.m);
    CHECK(cback.centers == cfg.centers);
}

TEST_CASE("bad inputs are rejected") {
    CHECK_THROWS(io::complex_from_json(io::json::parse(
        R"({"grading":"mod2","spaces":{"0":1,"1":1},"differentials":{"0":["1"],"1":["1"]}})")));
    CHECK_THROWS(io::arrangement_from_json(io::json::parse(R"(["1","0"])")));
    CHECK_THROWS(parse_rat("1/0"));
}
