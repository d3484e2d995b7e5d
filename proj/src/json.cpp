#include "cubelike/json.hpp"

namespace cubelike {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw SchemaError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(std::string("missing field '") + key + "'");
    return *it;
}

template <class T>
T get(const Json& j, const char* key) {
    const Json& v = field(j, key);
    try {
        return v.get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("field '") + key + "': " + e.what());
    }
}

std::vector<std::size_t> support_from_wire(const std::vector<std::int64_t>& wire) {
    std::vector<std::size_t> out;
    for (auto i : wire) {
        if (i < 1) throw SchemaError("support indices are 1-based");
        out.push_back(static_cast<std::size_t>(i - 1));
    }
    return out;
}

Json support_to_wire(const std::vector<std::size_t>& support) {
    Json out = Json::array();
    for (auto i : support) out.push_back(i + 1);
    return out;
}

}  // namespace

Json to_json(const Coloring& c) { return Json{{"k", c.k}, {"colors", c.colors}}; }

Coloring coloring_from_json(const Json& j) {
    Coloring c;
    c.k = get<int>(j, "k");
    c.colors = get<std::vector<Color>>(j, "colors");
    return c;
}

Json to_json(const HeubergerMatrix& m) {
    return Json{{"m", m.m}, {"a_columns", m.a_columns}, {"two_identity", m.two_identity}};
}

HeubergerMatrix heuberger_from_json(const Json& j) {
    HeubergerMatrix m;
    m.m = get<std::size_t>(j, "m");
    m.a_columns = get<std::vector<IntColumn>>(j, "a_columns");
    m.two_identity = get<bool>(j, "two_identity");
    for (const auto& c : m.a_columns)
        if (c.size() != m.m) throw SchemaError("a_columns entry has length different from m");
    return m;
}

Json to_json(const HomWitness& w, bool verified) {
    return Json{{"z", w.z}, {"support", support_to_wire(w.support)}, {"images", w.images}, {"verified", verified}};
}

HomWitness witness_from_json(const Json& j, const ConnectionSet& target) {
    HomWitness w;
    w.z = get<unsigned>(j, "z");
    w.support = support_from_wire(get<std::vector<std::int64_t>>(j, "support"));
    w.images = get<std::vector<Word>>(j, "images");
    w.target = target;
    return w;
}

Json to_json(const PayanCertificate& cert) {
    Json j{{"n", cert.dimension()},
           {"set", cert.set.masks()},
           {"classification", to_string(cert.classification)}};
    j["heuberger"] = cert.matrix ? to_json(*cert.matrix) : Json(nullptr);
    if (cert.functional) j["functional"] = *cert.functional;
    if (cert.odd_column) {
        j["odd_column"] = cert.odd_column->column;
        j["support"] = support_to_wire(cert.odd_column->support);
        j["z"] = cert.odd_column->z;
    }
    if (cert.witness) j["witness"] = to_json(*cert.witness, cert.witness_verified);
    if (cert.classification == Classification::NonBipartite) j["chi_lower_bound"] = cert.chi_lower_bound;
    if (cert.chi) j["chi"] = *cert.chi;
    return j;
}

PayanCertificate certificate_from_json(const Json& j, bool trust_flags) {
    PayanCertificate cert;
    try {
        cert.set = ConnectionSet(get<unsigned>(j, "n"), get<std::vector<Word>>(j, "set"));
        cert.classification = classification_from_string(get<std::string>(j, "classification"));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
    if (j.contains("heuberger") && !j["heuberger"].is_null()) cert.matrix = heuberger_from_json(j["heuberger"]);
    if (j.contains("functional")) cert.functional = get<Word>(j, "functional");
    if (j.contains("odd_column")) {
        OddColumn oc;
        oc.column = get<std::size_t>(j, "odd_column");
        oc.support = support_from_wire(get<std::vector<std::int64_t>>(j, "support"));
        oc.z = get<std::size_t>(j, "z");
        cert.odd_column = std::move(oc);
    }
    if (j.contains("witness")) {
        cert.witness = witness_from_json(j["witness"], cert.set);
        if (trust_flags) cert.witness_verified = get<bool>(j["witness"], "verified");
    }
    if (j.contains("chi_lower_bound")) cert.chi_lower_bound = get<int>(j, "chi_lower_bound");
    if (j.contains("chi")) cert.chi = get<int>(j, "chi");
    return cert;
}

PayanCertificate certificate_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    return certificate_from_json(j);
}

Json to_json(const SolveResult& r) {
    Json j{{"status", to_string(r.status)}, {"k", r.k}, {"clique_bound", r.clique_bound}, {"lower_bound", r.lower_bound}};
    j["chi"] = r.chi ? Json(*r.chi) : Json(nullptr);
    j["proven_lower"] = r.proven_lower;
    if (r.witness) j["coloring"] = to_json(*r.witness);
    return j;
}

Json to_json(const SweepSummary& s) {
    Json j{{"n", s.n},
           {"mode", s.mode == SweepMode::Exhaustive ? "exhaustive" : "random"},
           {"count", s.count},
           {"exact_chi", s.exact_chi},
           {"sets_examined", s.sets_examined},
           {"classifications", {{"bipartite", s.bipartite}, {"nonbipartite", s.nonbipartite}, {"has_loop", s.has_loop}}},
           {"solver_checks", s.solver_checks},
           {"certificates_rechecked", s.certificates_rechecked}};
    if (s.mode == SweepMode::Random) j["seed"] = s.seed;
    if (s.exact_chi) {
        Json hist = Json::object();
        for (const auto& [chi, count] : s.chi_histogram) hist[std::to_string(chi)] = count;
        j["chi_histogram"] = hist;
        j["chi_unresolved"] = s.chi_unresolved;
    }
    Json v = Json::array();
    for (const auto& x : s.violations) v.push_back({{"code", x.code}, {"set", x.set}, {"reason", x.reason}});
    j["violations"] = v;
    return j;
}

Json to_json(const LocalCheckReport& r) {
    Json classes = Json::array();
    for (const auto& c : r.classes) {
        Json cj{{"edge_class", c.edge_class},
                {"generator", c.generator},
                {"edges_checked", c.edges_checked},
                {"lift_size", c.lift_size},
                {"colorings_enumerated", c.colorings_enumerated},
                {"vacuous", c.vacuous},
                {"pass", c.pass}};
        if (c.counterexample) {
            Json ce = Json::array();
            for (const auto& [v, col] : *c.counterexample) ce.push_back({v, col});
            cj["counterexample"] = ce;
        }
        classes.push_back(cj);
    }
    return Json{{"n", r.n}, {"radius", r.radius}, {"all_pass", r.all_pass()}, {"classes", classes}};
}

}  // namespace cubelike
