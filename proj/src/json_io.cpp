#include "germcq/json_io.hpp"

#include <stdexcept>

namespace germcq {

namespace {

Json rat_vec_to_json(const RationalVector& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(rat_to_string(x));
    return arr;
}

RationalVector rat_vec_from_json(const Json& j) {
    RationalVector v;
    for (const auto& x : j) {
        if (x.is_number_integer())
            v.push_back(Rat(x.get<long long>()));
        else
            v.push_back(rat_from_string(x.get<std::string>()));
    }
    return v;
}

Json rat_rows_to_json(const std::vector<RationalVector>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(rat_vec_to_json(r));
    return arr;
}

std::vector<RationalVector> rat_rows_from_json(const Json& j) {
    std::vector<RationalVector> rows;
    for (const auto& r : j) rows.push_back(rat_vec_from_json(r));
    return rows;
}

}  // namespace

Json germ_to_json(const ConstraintGerm& germ) {
    Json j;
    j["v"] = kSchemaVersion;
    j["n"] = germ.n;
    j["g"] = Json::array();
    j["h"] = Json::array();
    for (const auto& p : germ.g) j["g"].push_back(p.to_string());
    for (const auto& p : germ.h) j["h"].push_back(p.to_string());
    return j;
}

ConstraintGerm germ_from_json(const Json& j) {
    if (!j.contains("n")) throw std::invalid_argument("germ document needs field 'n'");
    ConstraintGerm germ;
    germ.n = j.at("n").get<int>();
    if (germ.n < 1) throw std::invalid_argument("field 'n' must be positive");
    if (j.contains("g"))
        for (const auto& s : j.at("g"))
            germ.g.push_back(Polynomial::parse(s.get<std::string>(), germ.n));
    if (j.contains("h"))
        for (const auto& s : j.at("h"))
            germ.h.push_back(Polynomial::parse(s.get<std::string>(), germ.n));
    germ.check();
    return germ;
}

bool json_is_descriptor(const Json& j) {
    return j.contains("table");
}

Json descriptor_to_json(const NormalForm& nf) {
    Json j;
    j["v"] = kSchemaVersion;
    j["table"] = table_name(nf.table);
    j["n"] = nf.n;
    j["q"] = nf.q;
    j["r"] = nf.r;
    if (nf.is_regular()) return j;
    j["type"] = nf.type;
    if (nf.k > 0) j["k"] = nf.k;
    if (nf.table == Table::T2) {
        j["l"] = nf.l;
        j["l1"] = nf.l1;
    }
    if (!nf.eps.empty()) {
        Json e = Json::object();
        for (const auto& [key, v] : nf.eps) e[key] = v;
        j["eps"] = e;
    }
    if (!nf.delta.empty()) {
        Json e = Json::object();
        for (const auto& [key, v] : nf.delta) e[key] = v;
        j["delta"] = e;
    }
    if (!nf.alpha.empty()) {
        Json e = Json::object();
        for (const auto& [key, v] : nf.alpha) e[key] = rat_to_string(v);
        j["alpha"] = e;
    }
    return j;
}

NormalForm descriptor_from_json(const Json& j) {
    NormalForm nf;
    nf.table = table_from_name(j.at("table").get<std::string>());
    nf.n = j.at("n").get<int>();
    nf.q = j.value("q", 0);
    nf.r = j.value("r", nf.table == Table::T2 ? 0 : 1);
    if (nf.is_regular()) return nf;
    nf.type = j.at("type").get<std::string>();
    nf.k = j.value("k", 0);
    nf.l = j.value("l", 0);
    nf.l1 = j.value("l1", 0);
    if (j.contains("eps"))
        for (const auto& [key, v] : j.at("eps").items()) nf.eps[key] = v.get<int>();
    if (j.contains("delta"))
        for (const auto& [key, v] : j.at("delta").items()) nf.delta[key] = v.get<int>();
    if (j.contains("alpha")) {
        for (const auto& [key, v] : j.at("alpha").items()) {
            if (v.is_number_integer())
                nf.alpha[key] = Rat(v.get<long long>());
            else
                nf.alpha[key] = rat_from_string(v.get<std::string>());
        }
    }
    return nf;
}

Json verdict_to_json(const CqVerdict& v) {
    Json j;
    j["v"] = kSchemaVersion;
    j["licq"] = v.licq;
    j["mfcq"] = v.mfcq;
    j["acq"] = v.acq;
    j["gcq"] = v.gcq;
    j["branch"] = v.branch;
    return j;
}

Json cone_to_json(PolyhedralCone cone) {
    cone.ensure_v();
    cone.ensure_h();
    Json j;
    j["v"] = kSchemaVersion;
    j["n"] = cone.n;
    j["le"] = rat_rows_to_json(cone.le);
    j["eq"] = rat_rows_to_json(cone.eq);
    j["rays"] = rat_rows_to_json(cone.rays);
    j["lineality"] = rat_rows_to_json(cone.lineality);
    return j;
}

PolyhedralCone cone_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    if (j.contains("le") || j.contains("eq")) {
        return PolyhedralCone::from_h(
            n, j.contains("le") ? rat_rows_from_json(j.at("le")) : std::vector<RationalVector>{},
            j.contains("eq") ? rat_rows_from_json(j.at("eq")) : std::vector<RationalVector>{});
    }
    return PolyhedralCone::from_v(
        n,
        j.contains("rays") ? rat_rows_from_json(j.at("rays")) : std::vector<RationalVector>{},
        j.contains("lineality") ? rat_rows_from_json(j.at("lineality"))
                                : std::vector<RationalVector>{});
}

Json cone_descriptor_to_json(const ConeDescriptor& c) {
    Json j;
    j["v"] = kSchemaVersion;
    j["n"] = c.n;
    j["zero"] = c.zero_indices;
    j["nonpos"] = c.nonpos_indices;
    j["quad"] = c.quad.to_string();
    j["rel"] = c.rel == QuadRel::EQ0 ? "=0" : "<=0";
    if (c.excluded) {
        Json e;
        e["support"] = c.excluded->support;
        e["sign_poly"] = c.excluded->sign_poly.to_string();
        j["excluded"] = e;
    }
    return j;
}

Json codim_report_to_json(const CodimReport& r) {
    Json j;
    j["v"] = kSchemaVersion;
    j["codim"] = r.codims;
    j["verdict"] = verdict_name(r.verdict);
    if (r.verdict == CodimVerdict::Finite) j["value"] = r.value;
    return j;
}

Json agreement_report_to_json(const AgreementReport& r) {
    Json j;
    j["v"] = kSchemaVersion;
    j["clusters"] = r.clusters;
    j["necessity"] = {{"checked", r.necessity_checked}, {"passed", r.necessity_passed}};
    j["sufficiency"] = {{"sampled", r.sufficiency_sampled},
                        {"witnessed", r.sufficiency_witnessed},
                        {"rate", r.witness_rate()}};
    j["excluded"] = {{"probes", r.excluded_probes}, {"witnessed", r.excluded_witnessed}};
    j["agreement"] = r.agreement();
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

Json direction_estimate_to_json(const DirectionEstimate& e) {
    Json j;
    j["v"] = kSchemaVersion;
    Json dirs = Json::array();
    for (const auto& d : e.directions) dirs.push_back(d);
    j["directions"] = dirs;
    j["weights"] = e.weights;
    j["radius_used"] = e.radius_used;
    j["seed"] = e.seed;
    if (!e.notes.empty()) j["notes"] = e.notes;
    return j;
}

}  // namespace germcq
