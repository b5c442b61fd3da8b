#pragma once

#include <string>

#include <json.hpp>

#include "flexion/relations.hpp"

namespace flexion::io {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& q) { return q.str(); }

inline Rational rational_from(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("rational must be a \"p/q\" string or an integer");
}

inline json to_json(const RatVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline RatVector ratvector_from(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    RatVector v;
    for (const auto& x : j) v.push_back(rational_from(x));
    return v;
}

// noncommutative polynomials

inline json to_json(const NcPoly& p) {
    json out;
    out["alphabet"] = p.alphabet().names();
    json terms = json::array();
    for (const auto& [w, c] : p.terms()) terms.push_back({{"word", p.word_str(w)}, {"coeff", c.str()}});
    out["terms"] = std::move(terms);
    return out;
}

inline NcPoly ncpoly_from(const json& j) {
    if (!j.is_object() || !j.contains("alphabet") || !j.contains("terms")) throw ParseError("NcPoly needs alphabet and terms");
    const auto names = j.at("alphabet").get<std::vector<std::string>>();
    Alphabet alpha = Alphabet::ab();
    if (names != alpha.names()) {
        alpha = Alphabet::b(static_cast<int>(names.size()));
        if (names != alpha.names()) throw ParseError("unknown alphabet");
    }
    NcPoly p(alpha);
    for (const auto& t : j.at("terms")) {
        const std::string w = t.at("word").get<std::string>();
        p.add_term(w == "1" || w.empty() ? Word{} : NcPoly::parse_word(alpha, w), rational_from(t.at("coeff")));
    }
    return p;
}

inline json to_json(const Derivation& d) {
    return {{"val_a", to_json(d.val_a())}, {"val_b", to_json(d.val_b())}, {"weight", d.weight()}};
}

inline Derivation derivation_from(const json& j) {
    return {ncpoly_from(j.at("val_a")), ncpoly_from(j.at("val_b")), j.at("weight").get<int>()};
}

// commutative polynomials and moulds

inline json to_json(const MPoly& p) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back({{"exps", it->first}, {"coeff", it->second.str()}});
    return {{"arity", p.arity()}, {"terms", std::move(terms)}};
}

inline MPoly mpoly_from(const json& j) {
    const int arity = j.at("arity").get<int>();
    if (arity < 0) throw ParseError("negative arity");
    MPoly p(arity);
    for (const auto& t : j.at("terms")) {
        auto e = t.at("exps").get<Exponents>();
        if (static_cast<int>(e.size()) != arity) throw ParseError("exponent vector length differs from arity");
        for (int x : e)
            if (x < 0) throw ParseError("negative exponent");
        p.add_term(e, rational_from(t.at("coeff")));
    }
    return p;
}

inline json to_json(const RatComponent& c) {
    json den = json::array();
    for (const auto& [f, m] : c.den()) den.push_back(json::array({f.coeffs(), m}));
    return {{"num", to_json(c.num())}, {"den", std::move(den)}};
}

/// Denominator forms may be given in any integer scaling; the scale is folded into the numerator.
inline RatComponent ratcomponent_from(const json& j) {
    MPoly num = mpoly_from(j.at("num"));
    RatComponent::Den den;
    Rational scale(1);
    if (j.contains("den")) {
        for (const auto& e : j.at("den")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("denominator entries are [form, multiplicity]");
            auto form = e[0].get<IntForm>();
            const int mult = e[1].get<int>();
            if (mult < 0) throw ParseError("negative multiplicity");
            if (static_cast<int>(form.size()) != num.arity()) throw ParseError("denominator form arity differs");
            if (mult == 0) continue;
            auto [lf, s] = LinForm::canonical(form);
            den[lf] += mult;
            scale *= pow(Rational(s), static_cast<unsigned>(mult));
        }
    }
    return {Rational(1) / scale * num, std::move(den)};
}

inline json to_json(const Mould& m) {
    json comps = json::object();
    for (const auto& [r, c] : m.components()) comps[std::to_string(r)] = to_json(c);
    return {{"kind", var_prefix(m.kind())},
            {"empty", m.empty_value().str()},
            {"depth_bound", m.depth_bound()},
            {"components", std::move(comps)}};
}

inline Mould mould_from(const json& j) {
    const std::string k = j.at("kind").get<std::string>();
    if (k != "u" && k != "v") throw ParseError("mould kind must be \"u\" or \"v\"");
    const Rational empty = j.contains("empty") ? rational_from(j.at("empty")) : Rational(0);
    int bound = 0;
    if (j.contains("components"))
        for (const auto& [key, val] : j.at("components").items()) bound = std::max(bound, std::stoi(key));
    if (j.contains("depth_bound")) bound = j.at("depth_bound").get<int>();
    Mould m(k == "u" ? MouldKind::U : MouldKind::V, bound, empty);
    if (j.contains("components"))
        for (const auto& [key, val] : j.at("components").items()) {
            std::size_t used = 0;
            const int r = std::stoi(key, &used);
            if (used != key.size()) throw ParseError("component key must be an integer");
            m.set(r, ratcomponent_from(val));
        }
    return m;
}

inline json to_json(const SingularityReport& rep) {
    json rows = json::array();
    for (const auto& row : rep.rows)
        rows.push_back({{"depth", row.depth},
                        {"polynomial", row.polynomial},
                        {"cleared", to_json(row.cleared)},
                        {"quotient", row.quotient ? to_json(*row.quotient) : json(nullptr)}});
    return {{"all_polynomial", rep.all_polynomial()}, {"rows", std::move(rows)}};
}

// relations

inline json to_json(const Triple& t) { return json::array({t[0], t[1], t[2]}); }

inline json to_json(const RelationCertificate& cert) {
    json labels = json::array();
    for (const auto& [p, q] : cert.labels) labels.push_back(json::array({p, q}));
    json kernel = json::array();
    for (std::size_t k = 0; k < cert.kernel.size(); ++k) {
        json entry = {{"coeffs", to_json(cert.kernel[k])}, {"highest_weight", bool(cert.highest_weight[k])}};
        if (cert.depth == 3) {
            const auto& w = cert.witnesses[k];
            if (w) {
                json wl = json::array();
                for (const auto& t : w->labels) wl.push_back(to_json(t));
                entry["theta3"] = {{"labels", std::move(wl)}, {"coeffs", to_json(w->coeffs)}};
            } else {
                entry["theta3"] = nullptr;
            }
            const auto& l = cert.lifts[k];
            if (l) {
                json ll = json::array();
                for (const auto& t : l->labels) ll.push_back(to_json(t));
                entry["lift"] = {{"labels", std::move(ll)}, {"coeffs", to_json(l->coeffs)}};
            } else {
                entry["lift"] = nullptr;
            }
        }
        kernel.push_back(std::move(entry));
    }
    return {{"weight", cert.weight}, {"depth", cert.depth}, {"labels", std::move(labels)}, {"kernel", std::move(kernel)}};
}

inline Triple triple_from(const json& j) {
    if (!j.is_array() || j.size() != 3) throw ParseError("expected an index triple");
    return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

inline RelationCertificate certificate_from(const json& j) {
    RelationCertificate cert;
    cert.weight = j.at("weight").get<int>();
    cert.depth = j.at("depth").get<int>();
    for (const auto& l : j.at("labels")) cert.labels.emplace_back(l.at(0).get<int>(), l.at(1).get<int>());
    for (const auto& e : j.at("kernel")) {
        cert.kernel.push_back(ratvector_from(e.at("coeffs")));
        cert.highest_weight.push_back(e.value("highest_weight", false));
        std::optional<Theta3Witness> w;
        if (e.contains("theta3") && !e.at("theta3").is_null()) {
            Theta3Witness x;
            for (const auto& t : e.at("theta3").at("labels")) x.labels.push_back(triple_from(t));
            x.coeffs = ratvector_from(e.at("theta3").at("coeffs"));
            w = std::move(x);
        }
        cert.witnesses.push_back(std::move(w));
        std::optional<LiftSolution> l;
        if (e.contains("lift") && !e.at("lift").is_null()) {
            LiftSolution x;
            for (const auto& t : e.at("lift").at("labels")) x.labels.push_back(triple_from(t));
            x.coeffs = ratvector_from(e.at("lift").at("coeffs"));
            l = std::move(x);
        }
        cert.lifts.push_back(std::move(l));
    }
    return cert;
}

inline json to_json(const DimensionRow& row) {
    return {{"weight", row.weight},
            {"depth", row.depth},
            {"degree", row.degree},
            {"bialternal_dim", row.bialternal_dim},
            {"family_rank", row.family_rank}};
}

} // namespace flexion::io
