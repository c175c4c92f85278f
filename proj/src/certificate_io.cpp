// Copyright 2026 The noethops authors
// SPDX-License-Identifier: Apache-2.0

#include "noethops/certificate_io.hpp"

#include <json.hpp>

#include "noethops/format.hpp"
#include "noethops/parse.hpp"

namespace noethops {

using ordered_json = nlohmann::ordered_json;

std::string certificate_to_json(const Certificate& cert, int indent) {
    ordered_json doc;
    ordered_json ring;
    ring["vars"] = cert.ideal.ring()->vars;
    ring["field"] = "QQ";
    doc["ring"] = std::move(ring);

    ordered_json gens = ordered_json::array();
    for (const auto& g : cert.ideal.gens()) gens.push_back(to_string(g));
    doc["ideal"] = std::move(gens);

    ordered_json comps = ordered_json::array();
    for (const auto& comp : cert.components) {
        ordered_json c;
        ordered_json pgens = ordered_json::array();
        for (const auto& g : comp.prime.gens()) pgens.push_back(to_string(g));
        c["prime"] = std::move(pgens);
        c["free_vars"] = comp.split.free_names();
        ordered_json ops = ordered_json::array();
        for (const auto& op : comp.ops) ops.push_back(to_string(op));
        c["operators"] = std::move(ops);
        if (comp.nil > 0) c["nil"] = comp.nil;
        comps.push_back(std::move(c));
    }
    doc["components"] = std::move(comps);
    return doc.dump(indent) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("certificate JSON: ") + e.what(), 1, 1, "JSON document");
    }
    try {
        std::vector<std::string> vars = doc.at("ring").at("vars").get<std::vector<std::string>>();
        std::string field = doc.at("ring").at("field").get<std::string>();
        if (field != "QQ") throw ParseError("unsupported field '" + field + "'", 1, 1, "QQ");
        RingPtr ring = make_ring(std::move(vars));

        std::vector<Poly<Rational>> igens;
        for (const auto& s : doc.at("ideal")) igens.push_back(parse_polynomial(s, ring));
        Certificate cert{Ideal<Rational>(ring, std::move(igens)), {}};

        for (const auto& jc : doc.at("components")) {
            std::vector<Poly<Rational>> pgens;
            for (const auto& s : jc.at("prime")) pgens.push_back(parse_polynomial(s, ring));
            Ideal<Rational> prime(ring, std::move(pgens));
            std::vector<std::string> fv = jc.at("free_vars").get<std::vector<std::string>>();
            Splitting split = splitting_for(prime, fv);
            std::vector<DiffOp<Poly<Rational>>> ops;
            for (const auto& s : jc.at("operators")) ops.push_back(parse_operator(s, ring));
            int nil = jc.contains("nil") ? jc.at("nil").get<int>() : 0;
            size_t dim = ops.size();
            cert.components.emplace_back(std::move(prime), std::move(split), std::move(ops), dim,
                                         0, nil);
        }
        return cert;
    } catch (const ordered_json::exception& e) {
        throw ParseError(std::string("certificate JSON structure: ") + e.what(), 1, 1,
                         "certificate schema");
    }
}

}  // namespace noethops
