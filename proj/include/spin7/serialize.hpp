#pragma once
// JSON-compatible text forms. Scalars are strings ("p/q" exact, 17 significant
// digits float); vectors are 8-element arrays in coordinate order e0..e7;
// matrices are row-major 8×8 arrays; planes are [u, v].

#include "spin7/degree.hpp"
#include "spin7/spinmaps.hpp"

#include <json.hpp>

#include <string_view>

namespace spin7 {

using Json = nlohmann::ordered_json;

template <Scalar S>
Json to_json(const Vector8<S>& v) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < 8; ++i) arr.push_back(to_string(v[i]));
    return arr;
}

template <Scalar S>
Json to_json(const Matrix8<S>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < 8; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < 8; ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <Scalar S>
Json to_json(const OrientedPlane<S>& p) {
    return Json::array({to_json(p.u), to_json(p.v)});
}

template <Scalar S>
Json to_json(const CirclePoint<S>& t) {
    return Json::array({to_string(t.c), to_string(t.s)});
}

template <Scalar S>
Json to_json(const SoReport<S>& r) {
    return Json{{"orthogonality_residual", to_string(r.orthogonality_residual)},
                {"determinant", to_string(r.determinant)},
                {"pass", r.pass}};
}

Json pairs_to_json(const std::vector<std::pair<int, int>>& pairs);

template <Scalar S>
Json to_json(const MembershipReport<S>& r) {
    return Json{{"candidate_g", to_json(r.candidate_g)},
                {"relation_failures", pairs_to_json(r.relation_failures)},
                {"g_in_SO7", r.g_in_so7},
                {"is_member", r.is_member}};
}

Json to_json(const TrialityReport& r);
Json to_json(const SquareReport& r);
Json to_json(const DegreeReport& r);
Json to_json(const FrameTable& t);

/// "e3", "-e5", "2e1", "-1/2e4" or eight comma-separated rationals.
Vector8<Rational> parse_vector(std::string_view text);
/// "e1,e2" (two named units) or "<8 rationals>;<8 rationals>".
OrientedPlane<Rational> parse_plane(std::string_view text);
/// "c,s" on the unit circle, or "u=p/q" for the stereographic parameter.
CirclePoint<Rational> parse_angle(std::string_view text);

}  // namespace spin7
