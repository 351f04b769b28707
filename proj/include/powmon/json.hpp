#ifndef POWMON_JSON_HPP
#define POWMON_JSON_HPP

// nlohmann::json forms. A set is an array of [x, y] pairs; coordinates that
// do not fit in 64 bits are written as decimal strings.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cones.hpp"
#include "lattice.hpp"
#include "power_monoid.hpp"
#include "verify.hpp"

namespace powmon {

inline nlohmann::json integer_to_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline Integer integer_from_json(const nlohmann::json& j) {
    if (j.is_number_integer())
        return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string digits = j.get<std::string>();
        detail::cursor in(digits);
        Integer v(in.signed_digits());
        in.finish();
        return v;
    }
    throw parse_error("expected an integer, got " + j.dump());
}

inline nlohmann::json element_to_json(const GroupElement& g) {
    return nlohmann::json::array({integer_to_json(g.x), integer_to_json(g.y)});
}

inline GroupElement element_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2)
        throw parse_error("expected an [x, y] pair, got " + j.dump());
    return {integer_from_json(j[0]), integer_from_json(j[1])};
}

inline nlohmann::json points_to_json(std::span<const GroupElement> points) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& g : points)
        arr.push_back(element_to_json(g));
    return arr;
}

inline nlohmann::json subset_to_json(const FinSubset& s) { return points_to_json(s.elements()); }

inline FinSubset subset_from_json(const nlohmann::json& j) {
    if (!j.is_array())
        throw parse_error("expected an array of [x, y] pairs, got " + j.dump());
    std::vector<GroupElement> points;
    for (const auto& e : j)
        points.push_back(element_from_json(e));
    try {
        return FinSubset::from(std::move(points));
    } catch (const precondition_violation& e) {
        throw parse_error(e.what());
    }
}

inline nlohmann::json witness_to_json(const FactorWitness& w) {
    return nlohmann::json::array({element_to_json(w.g1), element_to_json(w.g2)});
}

inline nlohmann::json report_to_json(const VerifyReport& r) {
    nlohmann::json tallies = nlohmann::json::object();
    for (const auto& t : r.tallies)
        tallies[t.name] = {{"checks", t.checks}, {"failures", t.failures}};
    nlohmann::json records = nlohmann::json::array();
    for (const auto& f : r.failure_records)
        records.push_back({{"property", f.property},
                           {"trial", f.trial},
                           {"trial_seed", f.trial_seed},
                           {"inputs", f.inputs},
                           {"detail", f.detail}});
    return {{"trials", r.trials},           {"failures", r.failures},
            {"seed", r.seed},               {"size_bound", r.size_bound},
            {"coord_bound", r.coord_bound}, {"tallies", tallies},
            {"failure_records", records}};
}

} // namespace powmon

#endif // POWMON_JSON_HPP
