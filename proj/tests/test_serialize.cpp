#include "spin7/serialize.hpp"

#include <doctest.h>

using namespace spin7;
using Q = Rational;
using V = Vector8<Q>;

TEST_CASE("parse_vector") {
    CHECK(parse_vector("e3") == V::unit(3));
    CHECK(parse_vector("-e5") == -V::unit(5));
    CHECK(parse_vector("2e1") == V::unit(1, 2));
    CHECK(parse_vector("-1/2e4") == V::unit(4, Q(-1, 2)));
    CHECK(parse_vector(" e0 ") == V::unit(0));
    CHECK(parse_vector("1,0,0,0,0,0,0,-3/4") == V::unit(0) + V::unit(7, Q(-3, 4)));
    CHECK_THROWS_AS(parse_vector("e8"), DomainError);
    CHECK_THROWS_AS(parse_vector("x3"), DomainError);
    CHECK_THROWS_AS(parse_vector("e"), DomainError);
    CHECK_THROWS_AS(parse_vector("1,2,3"), DomainError);
    CHECK_THROWS_AS(parse_vector("1,0,0,0,0,0,0,z"), DomainError);
}

TEST_CASE("parse_plane") {
    const auto p = parse_plane("e1,e2");
    CHECK(p.u == V::unit(1));
    CHECK(p.v == V::unit(2));
    const auto q = parse_plane("0,1,0,0,0,0,0,0;0,0,-1,0,0,0,0,0");
    CHECK(q.u == V::unit(1));
    CHECK(q.v == -V::unit(2));
    CHECK_THROWS_AS(parse_plane("e1"), DomainError);
    CHECK_THROWS_AS(parse_plane("e1,e2,e3"), DomainError);
    CHECK_THROWS_AS(parse_plane("e1;e2;e3"), DomainError);
}

TEST_CASE("parse_angle") {
    CHECK(parse_angle("0,1") == CirclePoint<Q>{0, 1});
    CHECK(parse_angle("3/5,-4/5") == CirclePoint<Q>{Q(3, 5), Q(-4, 5)});
    CHECK(parse_angle("u=1/2") == CirclePoint<Q>{Q(3, 5), Q(4, 5)});
    CHECK_THROWS_AS(parse_angle("1,1"), DomainError);
    CHECK_THROWS_AS(parse_angle("1"), DomainError);
    CHECK_THROWS_AS(parse_angle("u=abc"), DomainError);
}

TEST_CASE("vector, matrix and circle JSON") {
    CHECK(to_json(V::unit(2, Q(1, 3))).dump() == R"(["0/1","0/1","1/3","0/1","0/1","0/1","0/1","0/1"])");
    CHECK(to_json(CirclePoint<Q>{0, -1}).dump() == R"(["0/1","-1/1"])");
    CHECK(to_json(CirclePoint<double>{0.5, 0.0}).dump() == R"(["0.5","0"])");

    const Json m = to_json(Matrix8<Q>::identity());
    REQUIRE(m.size() == 8);
    for (std::size_t i = 0; i < 8; ++i) {
        REQUIRE(m[i].size() == 8);
        for (std::size_t j = 0; j < 8; ++j) CHECK(m[i][j] == (i == j ? "1/1" : "0/1"));
    }

    const Json p = to_json(OrientedPlane<Q>{V::unit(1), V::unit(2)});
    CHECK(p.size() == 2);
    CHECK(p[1][2] == "1/1");
}

TEST_CASE("report JSON") {
    const Json so = to_json(so_check(Matrix8<Q>::identity()));
    CHECK(so.dump() == R"({"orthogonality_residual":"0/1","determinant":"1/1","pass":true})");

    const Json mem = to_json(verify_spin7(Matrix8<Q>(-Matrix8<Q>::identity())));
    CHECK(mem["is_member"] == true);
    CHECK(mem["g_in_SO7"] == true);
    CHECK(mem["relation_failures"].empty());

    TrialityReport tr;
    tr.failures.emplace_back(1, 2);
    CHECK(to_json(tr).dump() == R"({"failures":[[1,2]],"half_turn_failures":[],"pass":false})");

    SquareReport sq;
    sq.trials = 3;
    CHECK(to_json(sq).dump() == R"({"trials":3,"failures":[],"max_residual":"0","pass":true})");

    const Json deg = to_json(degree_ledger(sq, 2, 2));
    CHECK(deg["conclusion_magnitude"] == 8);
    CHECK(deg["sign_determined"] == false);
    CHECK(deg["p_degree"]["provenance"] == "computed");
    CHECK(deg["cover_multiplier"]["provenance"] == "cited");
    CHECK(deg["h_multiplier_magnitude"]["value"] == 4);
}

TEST_CASE("frame table JSON") {
    const OrientedPlane<Q> p{V::unit(1), V::unit(2)};
    const Json t = to_json(frame_table(basis_b(p, V::unit(4, 2))));
    CHECK(t[1][2] == "+xy");
    CHECK(t[4][4] == "-|w|^2 1");
    CHECK(t[5][6] == "-|w|^2 xy");
    CHECK(t[3][4] == "-w(xy)");
}
