#include "orbifold/report.hpp"

#include <sstream>

namespace orbifold {

namespace {

const char* sector_name(Sector s) {
    switch (s) {
        case Sector::U0: return "U0";
        case Sector::UC: return "UC";
        default: return "TW";
    }
}

}  // namespace

Json code_info_json(const LinearCode& c) {
    Json j;
    j["field"] = field_name(c.field());
    j["length"] = c.length();
    j["dim"] = c.dim();
    j["selfOrthogonal"] = is_self_orthogonal(c);
    j["selfDual"] = is_self_dual(c);
    j["weightEnumerator"] = weight_enumerator(c).coeffs;
    return j;
}

Json modules_json(const CodePair& p) {
    Json j;
    const auto labels = list_modules(p);
    j["count"] = labels.size();
    j["glob"] = glob_dimension(p).str();
    Json arr = Json::array();
    for (const ModuleLabel& m : labels)
        arr.push_back({{"label", to_string(m)},
                       {"sector", sector_name(m.sector)},
                       {"qdim", qdim(m, p).str()},
                       {"weightMod1", weight_mod1(m, p).str()},
                       {"dual", to_string(contragredient(m, p))}});
    j["modules"] = arr;
    return j;
}

std::string modules_csv(const CodePair& p) {
    std::ostringstream os;
    os << "label,sector,qdim,weight_mod1,dual\n";
    for (const ModuleLabel& m : list_modules(p))
        os << to_string(m) << ',' << sector_name(m.sector) << ',' << qdim(m, p).str() << ','
           << weight_mod1(m, p).str() << ',' << to_string(contragredient(m, p)) << '\n';
    return os.str();
}

Json fusion_json(const FusionVector& v) {
    Json arr = Json::array();
    for (const auto& [m, n] : v) arr.push_back({{"label", to_string(m)}, {"mult", n}});
    return arr;
}

Json table_json(const std::vector<FusionEntry>& table) {
    Json arr = Json::array();
    for (const FusionEntry& e : table)
        arr.push_back({{"a", to_string(e.a)}, {"b", to_string(e.b)}, {"result", fusion_json(e.result)}});
    return arr;
}

std::string table_csv(const std::vector<FusionEntry>& table) {
    std::ostringstream os;
    os << "a,b,c,mult\n";
    for (const FusionEntry& e : table)
        for (const auto& [m, n] : e.result) os << to_string(e.a) << ',' << to_string(e.b) << ',' << to_string(m) << ',' << n << '\n';
    return os.str();
}

Json verify_json(const VerifyReport& r) {
    Json j;
    j["mode"] = r.mode;
    j["seed"] = r.seed;
    j["labels"] = r.labels;
    j["cSelfDual"] = r.c_self_dual;
    if (r.c_self_dual) j["groupExponent"] = r.group_exponent;
    Json checks = Json::array();
    for (const CheckResult& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"checked", c.checked},
                          {"failures", c.failures},
                          {"ok", c.ok()},
                          {"counterexamples", c.counterexamples}});
    j["checks"] = checks;
    j["notes"] = r.notes;
    j["ok"] = r.ok();
    return j;
}

Json verlinde_json(const VerlindeResult& v, bool matches_fusion) {
    Json j;
    j["ell"] = v.length;
    j["d"] = v.dim;
    j["S00"] = v.s.s00.str();
    j["N"] = v.n;
    j["matches_fusion"] = matches_fusion;
    return j;
}

Json quadspace_json(const QuadSpace& qs) {
    Json j;
    j["dim"] = kQuadDim;
    j["labels"] = kQuadSize;
    j["phiIsomorphism"] = qs.verify_phi();
    j["bilinear"] = qs.verify_bilinear();
    Json items = Json::array();
    for (const FormItem& it : qs.verify_form_items())
        items.push_back({{"name", it.name}, {"checked", it.checked}, {"mismatches", it.mismatches}});
    j["formItems"] = items;
    const TypeReport t = qs.classify_type();
    j["singularCount"] = t.singular;
    j["type"] = t.type;
    j["classicalCounts"] = {{"plus", t.plus_count}, {"minus", t.minus_count}};
    j["radicalDim"] = qs.radical_dim();
    Json hist = Json::object();
    for (const auto& [w, n] : qs.weight_histogram()) hist[w.str()] = n;
    j["weightHistogram"] = hist;
    const SEtaReport s = qs.check_s_eta(qs.construct_eta());
    j["sEtaChecks"] = {{"isometry", s.isometry},
                       {"dimension", s.dimension},
                       {"totallySingular", s.totally_singular},
                       {"minWeight", s.min_weight.str()},
                       {"recovered", s.recovered},
                       {"ok", s.ok()}};
    return j;
}

}  // namespace orbifold
