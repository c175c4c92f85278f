// Copyright 2026 The noethops authors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "noethops/certificate_io.hpp"
#include "noethops/format.hpp"
#include "noethops/oracle.hpp"
#include "noethops/parse.hpp"

namespace py = pybind11;
using namespace noethops;

namespace {

RingPtr ring_of(const std::vector<std::string>& vars) { return make_ring(vars); }

Ideal<Rational> ideal_of(const RingPtr& ring, const std::vector<std::string>& gens) {
    std::vector<Poly<Rational>> gs;
    for (const auto& s : gens) gs.push_back(parse_polynomial(s, ring));
    return Ideal<Rational>(ring, std::move(gs));
}

std::vector<std::string> gb_strings(const Ideal<Rational>& I, const MonomialOrder& ord) {
    std::vector<std::string> out;
    for (const auto& g : *groebner_basis(I, ord)) out.push_back(to_string(g));
    return out;
}

MonomialOrder order_named(const std::string& name) {
    if (name == "lex") return MonomialOrder::lex();
    if (name == "grevlex") return MonomialOrder::grevlex();
    throw PreconditionError("unknown order '" + name + "' (grevlex or lex)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "local dual spaces and differential primary decomposition over QQ";

    py::register_exception<ParseError>(m, "NoethopsParseError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "NoethopsPreconditionError", PyExc_ValueError);
    py::register_exception<RingMismatchError>(m, "NoethopsRingError", PyExc_ValueError);

    m.def(
        "groebner_basis",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
           const std::string& order) { return gb_strings(ideal_of(ring_of(vars), gens),
                                                         order_named(order)); },
        py::arg("vars"), py::arg("gens"), py::arg("order") = "grevlex",
        "Reduced Groebner basis of the ideal generated by `gens`.");

    m.def(
        "normal_form",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
           const std::string& f, const std::string& order) {
            RingPtr R = ring_of(vars);
            return to_string(normal_form(parse_polynomial(f, R), ideal_of(R, gens),
                                         order_named(order)));
        },
        py::arg("vars"), py::arg("gens"), py::arg("f"), py::arg("order") = "grevlex",
        "Unique normal form of f modulo the ideal; '0' exactly for members.");

    m.def(
        "quotient_dimension",
        [](const std::vector<std::string>& vars,
           const std::vector<std::string>& gens) -> std::optional<size_t> {
            auto q = quotient_basis(ideal_of(ring_of(vars), gens));
            if (!q.finite) return std::nullopt;
            return q.dimension();
        },
        py::arg("vars"), py::arg("gens"),
        "Vector-space dimension of R/I, or None when infinite.");

    m.def(
        "truncated_dual",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
           const std::vector<std::string>& point, int order) {
            RingPtr R = ring_of(vars);
            auto basis = truncated_dual(ideal_of(R, gens), ideal_of(R, point), order);
            std::vector<std::string> ops;
            for (const auto& op : basis.ops) ops.push_back(to_string(op));
            return ops;
        },
        py::arg("vars"), py::arg("gens"), py::arg("maximal_ideal"), py::arg("order"),
        "Echelonized basis of the truncated dual space D^(order) at the maximal ideal.");

    m.def(
        "excess_dual",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
           const std::vector<std::string>& prime, int stall) {
            RingPtr R = ring_of(vars);
            Ideal<Rational> I = ideal_of(R, gens);
            Ideal<Rational> p = ideal_of(R, prime);
            Splitting s = free_variables(p);
            auto ex = excess_dual(extend_scalars(I, s), extend_scalars(p, s),
                                  extend_scalars(ideal_saturate(I, p), s), stall);
            py::dict out;
            out["dimension"] = ex.dim();
            out["dstar"] = ex.dstar;
            out["free_vars"] = s.free_names();
            std::vector<std::string> reps;
            for (const auto& r : ex.reps) reps.push_back(to_string(lift_to_weyl(r, s)));
            out["representatives"] = reps;
            return out;
        },
        py::arg("vars"), py::arg("gens"), py::arg("prime"), py::arg("stall") = 1,
        "Excess dual space of the ideal at a prime, with lifted representatives.");

    m.def(
        "noetherian_certificate",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
           const std::vector<std::vector<std::string>>& primes, int stall) {
            RingPtr R = ring_of(vars);
            std::vector<Ideal<Rational>> ps;
            for (const auto& p : primes) ps.push_back(ideal_of(R, p));
            return certificate_to_json(noetherian_certificate(ideal_of(R, gens), ps, stall));
        },
        py::arg("vars"), py::arg("gens"), py::arg("primes"), py::arg("stall") = 1,
        "Differential primary decomposition certificate as a JSON document.");

    m.def(
        "membership",
        [](const std::string& cert_json, const std::string& poly) {
            Certificate cert = certificate_from_json(cert_json);
            auto res = membership(parse_polynomial(poly, cert.ideal.ring()), cert);
            py::dict out;
            out["member"] = res.member;
            if (!res.member) {
                py::dict wit;
                std::vector<std::string> pgens;
                for (const auto& g : cert.components[res.component].prime.gens())
                    pgens.push_back(to_string(g));
                wit["prime"] = pgens;
                wit["operator"] = to_string(cert.components[res.component].ops[res.op_index]);
                wit["normal_form"] = to_string(*res.witness_nf);
                out["witness"] = wit;
            }
            return out;
        },
        py::arg("certificate_json"), py::arg("poly"),
        "Differential membership test against a certificate; returns a witness on failure.");

    m.def(
        "ortiz_component",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
           const std::vector<std::string>& maximal, int stall) {
            RingPtr R = ring_of(vars);
            auto oz = ortiz_component(ideal_of(R, gens), ideal_of(R, maximal), stall);
            std::vector<std::string> comp;
            for (const auto& g : *groebner_basis(oz.component)) comp.push_back(to_string(g));
            return py::make_tuple(oz.nil, comp);
        },
        py::arg("vars"), py::arg("gens"), py::arg("maximal_ideal"), py::arg("stall") = 1,
        "Canonical Ortiz component at an associated maximal ideal: (nil, generators).");

    m.def(
        "brute_membership",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
           const std::string& f) {
            RingPtr R = ring_of(vars);
            return brute_membership(parse_polynomial(f, R), ideal_of(R, gens));
        },
        py::arg("vars"), py::arg("gens"), py::arg("f"),
        "Independent Groebner membership oracle (for cross-checks).");
}
