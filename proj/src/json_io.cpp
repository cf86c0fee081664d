#include "limitless/json_io.hpp"

#include <cmath>

namespace limitless {

Json to_json(const Rational& r) { return r.frac_str(); }

Json to_json(const Interval& iv) {
    return Json{{"lo", to_json(iv.lo())}, {"hi", to_json(iv.hi())}};
}

Json to_json(const Polynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return arr;
}

Json to_json(const BivariatePolynomial& b) {
    Json rows = Json::array();
    for (int i = 0; i <= b.x_degree(); ++i) {
        Json row = Json::array();
        for (int j = 0; j <= b.row(i).degree(); ++j) row.push_back(to_json(b.coeff(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

const char* bound_kind_name(BoundKind k) {
    return k == BoundKind::basic_estimate_k ? "K_basic_estimate" : "M_derivative_bound";
}

} // namespace

Json to_json(const CertifiedBound& cb) {
    return Json{{"quantity", bound_kind_name(cb.quantity)},
                {"value", to_json(cb.value)},
                {"domain", to_json(cb.domain)},
                {"depth", cb.depth}};
}

Json to_json(const MonotonicityCertificate& cert) {
    Json partition = Json::array();
    for (const auto& t : cert.partition) partition.push_back(to_json(t));
    Json values = Json::array();
    for (const auto& v : cert.values) values.push_back(to_json(v));
    return Json{{"polynomial", to_json(cert.p)}, {"domain", to_json(cert.domain)},
                {"C", to_json(cert.c)},          {"K", to_json(cert.k.value)},
                {"depth", cert.k.depth},         {"partition", std::move(partition)},
                {"values", std::move(values)}};
}

Json to_json(const Modulus& m) {
    switch (m.kind()) {
    case Modulus::Kind::lipschitz:
        return Json{{"kind", "lipschitz"}, {"c", m.c()}};
    case Modulus::Kind::hoelder:
        return Json{{"kind", "hoelder"}, {"c", m.c()}, {"gamma", m.gamma()}};
    case Modulus::Kind::piecewise_linear_concave: {
        Json verts = Json::array();
        for (auto [h, v] : m.vertices()) verts.push_back(Json::array({h, v}));
        return Json{{"kind", "piecewise_linear_concave"}, {"vertices", std::move(verts)}};
    }
    }
    return {};
}

Json to_json(const VerificationReport& rep) {
    Json grid{{"lo", rep.domain_lo}, {"hi", rep.domain_hi}, {"n", rep.grid_n}};
    if (rep.directions > 0) {
        grid["directions"] = rep.directions;
        grid["magnitudes"] = rep.magnitudes;
    }
    Json j{{"inequality", rep.inequality},
           {"grid", std::move(grid)},
           {"empirical_constant", rep.empirical_constant},
           {"worst_pair", rep.worst_pair},
           {"violations", rep.violations}};
    if (!std::isnan(rep.checked_bound)) j["checked_bound"] = rep.checked_bound;
    return j;
}

Json to_json(const IntegralEnclosure& enc) {
    return Json{{"lower", enc.lower},
                {"upper", enc.upper},
                {"n_panels", enc.n_panels},
                {"lipschitz_L", enc.lipschitz_l},
                {"midpoint_sum", enc.midpoint_sum}};
}

Json to_json(const MixedPartialsReport& rep) {
    return Json{{"integral", rep.integral},
                {"tolerance", rep.tolerance},
                {"within_tolerance", rep.within_tolerance},
                {"loop_residual", rep.loop_residual},
                {"loop_tolerance", rep.loop_tolerance},
                {"agrees_with_loop", rep.agrees_with_loop}};
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw Error("expected a rational encoded as a string");
    return Rational::from_string(j.get<std::string>());
}

Interval interval_from_json(const Json& j) {
    return Interval(rational_from_json(j.at("lo")), rational_from_json(j.at("hi")));
}

Polynomial polynomial_from_json(const Json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return Polynomial(std::move(coeffs));
}

CertifiedBound certified_bound_from_json(const Json& j) {
    CertifiedBound cb;
    cb.value = rational_from_json(j.at("value"));
    cb.quantity = j.at("quantity").get<std::string>() == "M_derivative_bound"
                      ? BoundKind::derivative_bound_m
                      : BoundKind::basic_estimate_k;
    cb.domain = interval_from_json(j.at("domain"));
    cb.depth = j.at("depth").get<int>();
    return cb;
}

MonotonicityCertificate certificate_from_json(const Json& j) {
    MonotonicityCertificate cert;
    cert.p = polynomial_from_json(j.at("polynomial"));
    cert.domain = interval_from_json(j.at("domain"));
    cert.c = rational_from_json(j.at("C"));
    cert.k.value = rational_from_json(j.at("K"));
    cert.k.quantity = BoundKind::basic_estimate_k;
    cert.k.domain = cert.domain;
    cert.k.depth = j.at("depth").get<int>();
    for (const auto& t : j.at("partition")) cert.partition.push_back(rational_from_json(t));
    for (const auto& v : j.at("values")) cert.values.push_back(rational_from_json(v));
    return cert;
}

Modulus modulus_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "lipschitz") return Modulus::lipschitz(j.at("c").get<double>());
    if (kind == "hoelder")
        return Modulus::hoelder(j.at("c").get<double>(), j.at("gamma").get<double>());
    if (kind == "piecewise_linear_concave") {
        std::vector<Modulus::Vertex> verts;
        for (const auto& v : j.at("vertices"))
            verts.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
        return Modulus::piecewise_linear_concave(std::move(verts));
    }
    throw Error("unknown modulus kind '" + kind + "'");
}

} // namespace limitless
