#include "lrc/serial.hpp"

#include <fstream>

namespace lrc {

json field_to_json(const Field& f) {
    return json{{"p", f.p()}, {"s", f.s()}, {"modulus", f.modulus()}, {"generator", f.generator()}};
}

FieldPtr field_from_json(const json& j) {
    auto f = Field::create(j.at("p").get<std::uint64_t>(), j.at("s").get<std::uint32_t>(),
                           j.at("modulus").get<std::vector<std::uint32_t>>());
    if (j.contains("generator") && j["generator"].get<Elem>() != f->generator())
        fail(Errc::IoError, "field generator in file differs from canonical generator");
    return f;
}

json poly_to_json(const Poly& p) { return json(p.coeffs()); }

Poly poly_from_json(const FieldPtr& f, const json& j) {
    auto coeffs = j.get<std::vector<Elem>>();
    for (Elem c : coeffs)
        if (c >= f->q()) fail(Errc::IoError, "coefficient code out of field range");
    return Poly(f, std::move(coeffs));
}

json cert_to_json(const GoodPolyCert& cert, bool with_field) {
    json j{{"g", poly_to_json(cert.g)},
           {"sets", cert.sets},
           {"constants", cert.constants},
           {"roots", cert.roots}};
    if (cert.split)
        j["split"] = json{{"g1", poly_to_json(cert.split->first)},
                          {"g2", poly_to_json(cert.split->second)}};
    if (with_field) j["field"] = field_to_json(*cert.g.field());
    return j;
}

GoodPolyCert cert_from_json(const json& j, FieldPtr field) {
    if (!field) {
        if (!j.contains("field")) fail(Errc::IoError, "certificate file lacks a field");
        field = field_from_json(j.at("field"));
    }
    GoodPolyCert cert{poly_from_json(field, j.at("g")),
                      j.at("sets").get<std::vector<std::vector<Elem>>>(),
                      j.at("constants").get<std::vector<Elem>>(),
                      j.at("roots").get<std::vector<Elem>>(),
                      std::nullopt};
    if (j.contains("split"))
        cert.split = std::make_pair(poly_from_json(field, j["split"].at("g1")),
                                    poly_from_json(field, j["split"].at("g2")));
    auto rep = verify_cert(cert);
    if (!rep.pass) fail(Errc::IoError, "certificate file fails verification: " + rep.first_violation);
    return cert;
}

json instance_to_json(const CodeInstance& inst) {
    const auto& P = inst.params;
    std::vector<Elem> flat;
    flat.reserve(static_cast<std::size_t>(P.k) * P.n);
    for (const auto& row : inst.genmatrix) flat.insert(flat.end(), row.begin(), row.end());
    json params{{"field", field_to_json(*P.field)},
                {"variant", variant_name(P.variant)},
                {"r", P.r},
                {"delta", P.delta},
                {"k", P.k},
                {"L", P.L},
                {"s", P.s},
                {"v", P.v},
                {"n", P.n},
                {"cert", cert_to_json(P.cert, /*with_field=*/false)}};
    return json{{"params", std::move(params)},
                {"genmatrix", std::move(flat)},
                {"groups", inst.groups},
                {"claimed_d", inst.claimed_d},
                {"optimality", optimality_name(optimality_class(P))}};
}

CodeInstance instance_from_json(const json& j) {
    const auto& jp = j.at("params");
    FieldPtr field = field_from_json(jp.at("field"));
    GoodPolyCert cert = cert_from_json(jp.at("cert"), field);
    CodeParams P = validate(field, variant_from_name(jp.at("variant").get<std::string>()),
                            jp.at("r").get<std::uint32_t>(), jp.at("delta").get<std::uint32_t>(),
                            jp.at("k").get<std::uint32_t>(), std::move(cert),
                            jp.at("L").get<std::uint32_t>());
    CodeInstance inst = generator_matrix(P);
    if (j.contains("genmatrix")) {
        auto flat = j["genmatrix"].get<std::vector<Elem>>();
        if (flat.size() != static_cast<std::size_t>(P.k) * P.n)
            fail(Errc::IoError, "stored generator matrix has wrong shape");
        for (std::uint32_t r = 0; r < P.k; ++r)
            for (std::uint32_t c = 0; c < P.n; ++c)
                if (flat[static_cast<std::size_t>(r) * P.n + c] != inst.genmatrix[r][c])
                    fail(Errc::IoError, "stored generator matrix disagrees with reconstruction");
    }
    return inst;
}

json distance_report_to_json(const DistanceReport& rep) {
    json j{{"mode", distance_mode_name(rep.mode)},
           {"value", rep.value},
           {"codewords_checked", rep.codewords_checked},
           {"provenance", rep.provenance}};
    j["witness"] = rep.witness ? json(*rep.witness) : json(nullptr);
    return j;
}

json locality_report_to_json(const LocalityReport& rep) {
    json groups = json::array();
    for (const auto& g : rep.groups)
        groups.push_back(json{{"group", g.group}, {"pass", g.pass}, {"note", g.note}});
    return json{{"pass", rep.pass}, {"groups", std::move(groups)},
                {"first_violation", rep.first_violation}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::IoError, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(Errc::IoError, "cannot parse " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) fail(Errc::IoError, "cannot open " + path + " for writing");
    out << j.dump(1) << "\n";
}

}  // namespace lrc
