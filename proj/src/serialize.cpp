#include "spin7/serialize.hpp"

#include <string>
#include <vector>

namespace spin7 {

Json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
    Json arr = Json::array();
    for (const auto& [i, j] : pairs) arr.push_back(Json::array({i, j}));
    return arr;
}

Json to_json(const TrialityReport& r) {
    return Json{{"failures", pairs_to_json(r.failures)},
                {"half_turn_failures", pairs_to_json(r.half_turn_failures)},
                {"pass", r.pass()}};
}

Json to_json(const SquareReport& r) {
    Json failures = Json::array();
    for (auto k : r.failures) failures.push_back(k);
    return Json{{"trials", r.trials}, {"failures", failures}, {"max_residual", to_string(r.max_residual)},
                {"pass", r.pass()}};
}

namespace {

Json ledger_entry(const LedgerEntry& e) {
    return Json{{"value", e.value},
                {"provenance", e.provenance == Provenance::Computed ? "computed" : "cited"},
                {"source", e.source}};
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

}  // namespace

Json to_json(const DegreeReport& r) {
    return Json{{"p_degree", ledger_entry(r.p_degree)},
                {"cover_multiplier", ledger_entry(r.cover_multiplier)},
                {"h_multiplier_magnitude", ledger_entry(r.h_multiplier_magnitude)},
                {"conclusion_magnitude", r.conclusion_magnitude},
                {"sign_determined", r.sign_determined}};
}

Json to_json(const FrameTable& t) {
    static constexpr const char* names[8] = {"1", "x", "y", "xy", "w", "wx", "wy", "w(xy)"};
    Json rows = Json::array();
    for (const auto& row : t) {
        Json out = Json::array();
        for (const auto& e : row) {
            std::string cell = e.sign < 0 ? "-" : "+";
            if (e.scaled) cell += "|w|^2 ";
            cell += names[e.index];
            out.push_back(cell);
        }
        rows.push_back(std::move(out));
    }
    return rows;
}

Vector8<Rational> parse_vector(std::string_view text) {
    text = trim(text);
    const auto parts = split(text, ',');
    if (parts.size() == 8) {
        Vector8<Rational> v;
        for (std::size_t i = 0; i < 8; ++i) v[i] = parse_rational(parts[i]);
        return v;
    }
    if (parts.size() != 1) {
        throw DomainError("vector needs 8 coordinates or a named unit: " + std::string(text));
    }
    const auto e = text.find('e');
    if (e == std::string_view::npos || e + 2 != text.size() || text[e + 1] < '0' || text[e + 1] > '7') {
        throw DomainError("malformed vector: " + std::string(text));
    }
    std::string_view coeff = text.substr(0, e);
    Rational scale = 1;
    if (coeff == "-") {
        scale = -1;
    } else if (coeff == "+") {
        scale = 1;
    } else if (!coeff.empty()) {
        scale = parse_rational(coeff);
    }
    return Vector8<Rational>::unit(text[e + 1] - '0', scale);
}

OrientedPlane<Rational> parse_plane(std::string_view text) {
    text = trim(text);
    if (text.find(';') != std::string_view::npos) {
        const auto parts = split(text, ';');
        if (parts.size() != 2) throw DomainError("plane needs exactly two vectors: " + std::string(text));
        return {parse_vector(parts[0]), parse_vector(parts[1])};
    }
    const auto parts = split(text, ',');
    if (parts.size() != 2) throw DomainError("malformed plane: " + std::string(text));
    return {parse_vector(parts[0]), parse_vector(parts[1])};
}

CirclePoint<Rational> parse_angle(std::string_view text) {
    text = trim(text);
    if (text.starts_with("u=")) {
        return circle_from_parameter(parse_rational(text.substr(2)));
    }
    const auto parts = split(text, ',');
    if (parts.size() != 2) throw DomainError("angle must be 'c,s' or 'u=p/q': " + std::string(text));
    CirclePoint<Rational> p{parse_rational(parts[0]), parse_rational(parts[1])};
    if (!on_unit_circle(p)) throw DomainError("angle is not on the unit circle: " + std::string(text));
    return p;
}

}  // namespace spin7
