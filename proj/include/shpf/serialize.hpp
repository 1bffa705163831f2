#pragma once

#include <json.hpp>

#include "shpf/characters.hpp"
#include "shpf/shifted.hpp"
#include "shpf/symfunc.hpp"
#include "shpf/tgraded.hpp"

namespace shpf {

using Json = nlohmann::ordered_json;

inline Json partition_to_json(const Partition& lambda) {
    return Json(lambda.parts());
}

inline Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition: array expected");
    return Partition(j.get<std::vector<int>>());
}

inline Json symfunc_to_json(const SymFunc& f) {
    Json terms = Json::array();
    for (const auto& [lam, c] : f.terms())
        terms.push_back({{"partition", partition_to_json(lam)}, {"coeff", to_string(c)}});
    return {{"degree", f.degree()}, {"basis", "p"}, {"terms", std::move(terms)}};
}

inline SymFunc symfunc_from_json(const Json& j) {
    if (j.at("basis").get<std::string>() != "p")
        throw std::invalid_argument("symfunc: p basis expected");
    SymFunc f(j.at("degree").get<int>());
    for (const auto& term : j.at("terms"))
        f.add_term(partition_from_json(term.at("partition")),
                   rational_from_string(term.at("coeff").get<std::string>()));
    return f;
}

inline Json tsymfunc_to_json(const TSymFunc& f) {
    Json terms = Json::array();
    for (const auto& [lam, poly] : f.terms()) {
        Json coeffs = Json::array();
        for (const auto& c : poly.coeffs()) coeffs.push_back(to_string(c));
        terms.push_back({{"partition", partition_to_json(lam)}, {"poly", std::move(coeffs)}});
    }
    return {{"degree", f.degree()}, {"basis", "p"}, {"terms", std::move(terms)}};
}

inline TSymFunc tsymfunc_from_json(const Json& j) {
    if (j.at("basis").get<std::string>() != "p")
        throw std::invalid_argument("tsymfunc: p basis expected");
    TSymFunc f(j.at("degree").get<int>());
    for (const auto& term : j.at("terms")) {
        std::vector<Rational> coeffs;
        for (const auto& c : term.at("poly"))
            coeffs.push_back(rational_from_string(c.get<std::string>()));
        f.add_term(partition_from_json(term.at("partition")), TPoly(std::move(coeffs)));
    }
    return f;
}

// V-basis expansions share the term layout, tagged by which V family indexes it.
inline Json expansion_to_json(int degree, const std::string& basis,
                              const std::map<Partition, Rational>& coeffs) {
    Json terms = Json::array();
    for (const auto& [lam, c] : coeffs)
        terms.push_back({{"partition", partition_to_json(lam)}, {"coeff", to_string(c)}});
    return {{"degree", degree}, {"basis", basis}, {"terms", std::move(terms)}};
}

inline std::map<Partition, Rational> expansion_from_json(const Json& j) {
    std::map<Partition, Rational> out;
    for (const auto& term : j.at("terms"))
        out.emplace(partition_from_json(term.at("partition")),
                    rational_from_string(term.at("coeff").get<std::string>()));
    return out;
}

inline Json naive_to_json(const SortedNaiveShifted& x) {
    return {{"p", x.p}, {"sbar", x.sbar}};
}

inline SortedNaiveShifted naive_from_json(const Json& j) {
    return {j.at("p").get<std::vector<int>>(), j.at("sbar").get<std::vector<int>>()};
}

inline Json odd_to_json(const SortedOddShifted& x) {
    Json tau = Json::array();
    for (const auto& [a, b] : x.tau) tau.push_back(Json::array({a, b}));
    return {{"p", x.p}, {"sbar", x.sbar}, {"tau", std::move(tau)}};
}

inline SortedOddShifted odd_from_json(const Json& j) {
    Matching tau;
    for (const auto& arc : j.at("tau")) {
        if (!arc.is_array() || arc.size() != 2)
            throw std::invalid_argument("odd object: arcs are pairs");
        tau.emplace_back(arc[0].get<int>(), arc[1].get<int>());
    }
    return {j.at("p").get<std::vector<int>>(), j.at("sbar").get<std::vector<int>>(),
            std::move(tau)};
}

inline Json classfunction_to_json(const ClassFunction& chi) {
    Json values = Json::array();
    for (const auto& [lam, v] : chi.values()) {
        Json value = v.is_rational()
                         ? Json(to_string(v.a))
                         : Json(Json::array({to_string(v.a), to_string(v.b)}));
        values.push_back({{"type", partition_to_json(lam)}, {"value", std::move(value)}});
    }
    return {{"degree", chi.degree()},
            {"kind", chi.kind() == ClassFunction::Kind::Ordinary ? "ordinary" : "spin"},
            {"values", std::move(values)}};
}

inline ClassFunction classfunction_from_json(const Json& j) {
    auto kind = j.at("kind").get<std::string>();
    if (kind != "ordinary" && kind != "spin")
        throw std::invalid_argument("class function: unknown kind");
    ClassFunction chi(j.at("degree").get<int>(), kind == "spin"
                                                     ? ClassFunction::Kind::Spin
                                                     : ClassFunction::Kind::Ordinary);
    for (const auto& entry : j.at("values")) {
        const Json& v = entry.at("value");
        Sqrt2Rational value =
            v.is_array() ? Sqrt2Rational(rational_from_string(v.at(0).get<std::string>()),
                                         rational_from_string(v.at(1).get<std::string>()))
                         : Sqrt2Rational(rational_from_string(v.get<std::string>()));
        chi.set(partition_from_json(entry.at("type")), value);
    }
    return chi;
}

} // namespace shpf
