// Copyright 2026 The noethops authors
// SPDX-License-Identifier: Apache-2.0
//
// noethops: local dual spaces, excess duals, Noetherian operator
// certificates, differential membership tests, and Ortiz components for
// ideals over QQ.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "noethops/certificate_io.hpp"
#include "noethops/format.hpp"
#include "noethops/oracle.hpp"
#include "noethops/parse.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitNonMember = 3;
constexpr int kExitPrecondition = 4;

using nlohmann::ordered_json;
using namespace noethops;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0, "readable file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ProblemFile load_problem(const std::string& path) { return parse_problem(read_file(path)); }

const Ideal<Rational>& named_ideal(const ProblemFile& pf, const std::string& name) {
    const Ideal<Rational>* I = pf.find_ideal(name);
    if (!I) throw ParseError("no ideal named '" + name + "' in the problem file", 0, 0, "ideal");
    return *I;
}

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

/// --free-vars "x2" for single-prime commands, or "P=x1+x2,Q=" per prime for
/// noetherian.
std::map<std::string, std::vector<std::string>> parse_free_var_spec(const std::string& spec) {
    std::map<std::string, std::vector<std::string>> out;
    for (const std::string& item : split_list(spec, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) {
            out[""] = split_list(item, '+');
        } else {
            out[item.substr(0, eq)] = split_list(item.substr(eq + 1), '+');
        }
    }
    return out;
}

void emit(const ordered_json& doc, bool json, const std::string& plain) {
    if (json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << plain;
}

int cmd_gb(const std::string& problem, const std::string& ideal_name, const std::string& order,
           bool json) {
    ProblemFile pf = load_problem(problem);
    const Ideal<Rational>& I = named_ideal(pf, ideal_name);
    MonomialOrder ord = order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
    auto gb = groebner_basis(I, ord);
    ordered_json doc;
    doc["ideal"] = ideal_name;
    doc["order"] = order;
    ordered_json arr = ordered_json::array();
    std::string plain;
    for (const auto& g : *gb) {
        arr.push_back(to_string(g));
        plain += to_string(g) + "\n";
    }
    doc["basis"] = std::move(arr);
    emit(doc, json, plain);
    return kExitOk;
}

int cmd_dual(const std::string& problem, const std::string& ideal_name, const std::string& at,
             int order, bool json) {
    ProblemFile pf = load_problem(problem);
    const Ideal<Rational>& I = named_ideal(pf, ideal_name);
    Ideal<Rational> m = pf.locus(at);
    DualBasis<Rational> basis = truncated_dual(I, m, order);
    ordered_json doc;
    doc["ideal"] = ideal_name;
    doc["at"] = at;
    doc["order"] = order;
    doc["dimension"] = basis.dim();
    ordered_json arr = ordered_json::array();
    std::string plain;
    for (const auto& op : basis.ops) {
        arr.push_back(to_string(op));
        plain += to_string(op) + "\n";
    }
    doc["operators"] = std::move(arr);
    emit(doc, json, plain);
    return kExitOk;
}

struct LocalizedRun {
    Splitting split;
    ExcessDual<RatFunc> excess;
    std::vector<DiffOp<Poly<Rational>>> lifted;
};

LocalizedRun run_excess(const ProblemFile& pf, const Ideal<Rational>& I,
                        const Ideal<Rational>& prime, const std::optional<std::string>& sat_name,
                        int stall, const std::vector<std::string>* free_vars) {
    Splitting split = free_vars ? splitting_for(prime, *free_vars) : free_variables(prime);
    Ideal<Rational> satR = sat_name ? named_ideal(pf, *sat_name) : ideal_saturate(I, prime);
    ExcessDual<RatFunc> ex = excess_dual(extend_scalars(I, split), extend_scalars(prime, split),
                                         extend_scalars(satR, split), stall);
    std::vector<DiffOp<Poly<Rational>>> lifted;
    for (const auto& r : ex.reps) lifted.push_back(lift_to_weyl(r, split));
    return LocalizedRun{std::move(split), std::move(ex), std::move(lifted)};
}

int cmd_excess(const std::string& problem, const std::string& ideal_name,
               const std::string& prime_name, const std::optional<std::string>& sat_name,
               int stall, const std::string& free_var_spec, bool json) {
    ProblemFile pf = load_problem(problem);
    const Ideal<Rational>& I = named_ideal(pf, ideal_name);
    Ideal<Rational> prime = pf.locus(prime_name);
    std::optional<std::vector<std::string>> fv;
    if (!free_var_spec.empty()) {
        auto spec = parse_free_var_spec(free_var_spec);
        auto it = spec.count(prime_name) ? spec.find(prime_name) : spec.find("");
        if (it != spec.end()) fv = it->second;
    }
    LocalizedRun run = run_excess(pf, I, prime, sat_name, stall, fv ? &*fv : nullptr);
    ordered_json doc;
    doc["prime"] = prime_name;
    doc["free_vars"] = run.split.free_names();
    doc["dimension"] = run.excess.dim();
    doc["dstar"] = run.excess.dstar;
    ordered_json arr = ordered_json::array();
    std::string plain = "dimension = " + std::to_string(run.excess.dim()) +
                        ", dstar = " + std::to_string(run.excess.dstar) + "\n";
    for (const auto& op : run.lifted) {
        arr.push_back(to_string(op));
        plain += to_string(op) + "\n";
    }
    doc["representatives"] = std::move(arr);
    emit(doc, json, plain);
    return kExitOk;
}

int cmd_noetherian(const std::string& problem, const std::string& ideal_name,
                   const std::string& primes_arg, int stall, const std::string& free_var_spec,
                   const std::string& out_path) {
    ProblemFile pf = load_problem(problem);
    const Ideal<Rational>& I = named_ideal(pf, ideal_name);
    std::vector<std::string> prime_names =
        primes_arg.empty() ? pf.primes : split_list(primes_arg, ',');
    if (prime_names.empty())
        throw ParseError("no associated primes given (flag --primes or a `primes` statement)", 0,
                         0, "prime list");
    std::vector<Ideal<Rational>> primes;
    for (const auto& n : prime_names) primes.push_back(named_ideal(pf, n));
    std::map<size_t, std::vector<std::string>> overrides;
    if (!free_var_spec.empty()) {
        auto spec = parse_free_var_spec(free_var_spec);
        for (size_t i = 0; i < prime_names.size(); ++i)
            if (spec.count(prime_names[i])) overrides[i] = spec[prime_names[i]];
    }
    Certificate cert = noetherian_certificate(I, primes, stall, overrides);
    std::string doc = certificate_to_json(cert);
    if (out_path.empty()) {
        std::cout << doc;
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot write '" + out_path + "'", 0, 0, "writable file");
        out << doc;
    }
    return kExitOk;
}

int cmd_member(const std::string& cert_path, const std::string& poly_text, bool json) {
    Certificate cert = certificate_from_json(read_file(cert_path));
    Poly<Rational> f = parse_polynomial(poly_text, cert.ideal.ring());
    MembershipResult res = membership(f, cert);
    ordered_json doc;
    doc["poly"] = to_string(f);
    doc["member"] = res.member;
    if (res.member) {
        emit(doc, json, "member\n");
        return kExitOk;
    }
    const CertComponent& comp = cert.components[res.component];
    ordered_json wit;
    ordered_json pgens = ordered_json::array();
    for (const auto& g : comp.prime.gens()) pgens.push_back(to_string(g));
    wit["prime"] = std::move(pgens);
    wit["operator"] = to_string(comp.ops[res.op_index]);
    wit["normal_form"] = to_string(*res.witness_nf);
    doc["witness"] = std::move(wit);
    if (json) std::cout << doc.dump(2) << "\n";
    std::cerr << "not a member: operator " << to_string(comp.ops[res.op_index]) << " at prime <";
    for (size_t i = 0; i < comp.prime.gens().size(); ++i)
        std::cerr << (i ? ", " : "") << to_string(comp.prime.gens()[i]);
    std::cerr << "> leaves normal form " << to_string(*res.witness_nf) << "\n";
    if (!json) std::cout << "non-member\n";
    return kExitNonMember;
}

int cmd_ortiz(const std::string& problem, const std::string& ideal_name,
              const std::string& prime_name, int stall, const std::string& free_var_spec,
              bool json) {
    ProblemFile pf = load_problem(problem);
    const Ideal<Rational>& I = named_ideal(pf, ideal_name);
    Ideal<Rational> prime = pf.locus(prime_name);
    ordered_json doc;
    doc["prime"] = prime_name;
    std::string plain;
    if (quotient_basis(prime).finite) {
        OrtizComponent<Rational> oz = ortiz_component(I, prime, stall);
        auto gb = groebner_basis(oz.component);
        doc["nil"] = oz.nil;
        doc["localized"] = false;
        ordered_json arr = ordered_json::array();
        plain = "nil = " + std::to_string(oz.nil) + "\n";
        for (const auto& g : *gb) {
            arr.push_back(to_string(g));
            plain += to_string(g) + "\n";
        }
        doc["component"] = std::move(arr);
    } else {
        std::optional<std::vector<std::string>> fv;
        if (!free_var_spec.empty()) {
            auto spec = parse_free_var_spec(free_var_spec);
            auto it = spec.count(prime_name) ? spec.find(prime_name) : spec.find("");
            if (it != spec.end()) fv = it->second;
        }
        Splitting s = fv ? splitting_for(prime, *fv) : free_variables(prime);
        Ideal<RatFunc> Iloc = extend_scalars(I, s);
        Ideal<RatFunc> mloc = extend_scalars(prime, s);
        OrtizComponent<RatFunc> oz = ortiz_component(Iloc, mloc, stall);
        auto gb = groebner_basis(oz.component);
        doc["nil"] = oz.nil;
        doc["localized"] = true;
        doc["free_vars"] = s.free_names();
        ordered_json arr = ordered_json::array();
        plain = "nil = " + std::to_string(oz.nil) + " (component over QQ(" ;
        auto fnames = s.free_names();
        for (size_t i = 0; i < fnames.size(); ++i) plain += (i ? "," : "") + fnames[i];
        plain += ")[";
        auto bnames = s.bound_names();
        for (size_t i = 0; i < bnames.size(); ++i) plain += (i ? "," : "") + bnames[i];
        plain += "])\n";
        for (const auto& g : *gb) {
            arr.push_back(to_string(g));
            plain += to_string(g) + "\n";
        }
        doc["component"] = std::move(arr);
    }
    emit(doc, json, plain);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local dual spaces and differential primary decomposition over QQ"};
    app.require_subcommand(1);

    std::string problem, ideal_name = "I", order = "grevlex", at, prime_name, poly_text;
    std::string primes_arg, free_var_spec, out_path, cert_path;
    std::optional<std::string> sat_name;
    int dual_order = 0, stall = 1;
    bool json = false;

    auto add_common = [&](CLI::App* sub, bool with_ideal = true) {
        sub->add_option("problem", problem, "problem file")->required();
        if (with_ideal) sub->add_option("--ideal", ideal_name, "ideal name (default I)");
        sub->add_flag("--json", json, "machine-readable output");
    };

    CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis");
    add_common(gb);
    gb->add_option("--order", order, "monomial order: grevlex|lex")
        ->check(CLI::IsMember({"grevlex", "lex"}));

    CLI::App* dual = app.add_subcommand("dual", "truncated local dual space");
    add_common(dual);
    dual->add_option("--at", at, "point or maximal ideal name")->required();
    dual->add_option("--order", dual_order, "truncation order d")->required();

    CLI::App* excess = app.add_subcommand("excess", "excess dual space at a prime");
    add_common(excess);
    excess->add_option("--prime", prime_name, "prime ideal name")->required();
    std::string sat_tmp;
    excess->add_option("--sat", sat_tmp, "precomputed saturation ideal name");
    excess->add_option("--stall", stall, "consecutive stable steps required (default 1)");
    excess->add_option("--free-vars", free_var_spec, "free variable override, e.g. x1+x2");

    CLI::App* noeth = app.add_subcommand("noetherian", "Noetherian operator certificate (JSON)");
    add_common(noeth);
    noeth->add_option("--primes", primes_arg, "comma-separated associated prime names");
    noeth->add_option("--stall", stall, "consecutive stable steps required (default 1)");
    noeth->add_option("--free-vars", free_var_spec, "overrides, e.g. P1=x2,P2=x1+x3");
    noeth->add_option("--out", out_path, "write the certificate here instead of stdout");

    CLI::App* member = app.add_subcommand("member", "differential membership test");
    member->add_option("--cert", cert_path, "certificate JSON file")->required();
    member->add_option("--poly", poly_text, "polynomial to test")->required();
    member->add_flag("--json", json, "machine-readable output");

    CLI::App* ortiz = app.add_subcommand("ortiz", "canonical Ortiz primary component");
    add_common(ortiz);
    ortiz->add_option("--prime", prime_name, "associated prime or point name")->required();
    ortiz->add_option("--stall", stall, "consecutive stable steps required (default 1)");
    ortiz->add_option("--free-vars", free_var_spec, "free variable override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gb->parsed()) return cmd_gb(problem, ideal_name, order, json);
        if (dual->parsed()) return cmd_dual(problem, ideal_name, at, dual_order, json);
        if (excess->parsed()) {
            if (!sat_tmp.empty()) sat_name = sat_tmp;
            return cmd_excess(problem, ideal_name, prime_name, sat_name, stall, free_var_spec,
                              json);
        }
        if (noeth->parsed())
            return cmd_noetherian(problem, ideal_name, primes_arg, stall, free_var_spec, out_path);
        if (member->parsed()) return cmd_member(cert_path, poly_text, json);
        if (ortiz->parsed())
            return cmd_ortiz(problem, ideal_name, prime_name, stall, free_var_spec, json);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const RingMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitUsage;
}
