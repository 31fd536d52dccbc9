#include "superchar/json_io.hpp"

namespace superchar {

nlohmann::json to_json(const Partition& p) {
    return nlohmann::json(p.parts());
}

Partition partition_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition JSON must be an array");
    return Partition(j.get<std::vector<int>>());
}

nlohmann::json to_json(const CharExpansion& e) {
    nlohmann::json j;
    j["family"] = family_name(e.family);
    switch (e.family) {
        case Family::SoOddRect:
        case Family::SoEvenFork: j["k"] = e.k; break;
        case Family::Osp1Rect: j["n"] = e.n; break;
        default:
            j["m"] = e.m;
            j["n"] = e.n;
            break;
    }
    if (e.r >= 0) j["r"] = e.r;
    j["p"] = e.p;
    j["prefactor"] = {{"x_exp", to_string(e.x_exp)}, {"y_exp", to_string(e.y_exp)}};
    j["cutoff"] = e.cutoff;
    if (e.conjectural) j["conjectural"] = true;
    nlohmann::json terms = nlohmann::json::array();
    for (const Term& t : e.terms)
        terms.push_back({{"partition", to_json(t.partition)}, {"coeff", t.coeff}});
    j["terms"] = std::move(terms);
    return j;
}

nlohmann::json to_json(const TruncatedSeries& s) {
    nlohmann::json j;
    j["variable"] = s.variable();
    j["trunc"] = s.trunc();
    j["coeffs"] = s.coeff_strings();
    return j;
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["identity"] = r.identity;
    j["params"] = r.params;
    j["status"] = r.passed ? "pass" : "fail";
    if (!r.passed) j["first_mismatch"] = r.first_mismatch;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

}  // namespace superchar
