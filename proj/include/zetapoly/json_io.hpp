#pragma once

// JSON views of the library's value types. Rationals are always strings.

#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "exactcore.hpp"
#include "habiro.hpp"
#include "highprec.hpp"
#include "modforms.hpp"
#include "periods.hpp"
#include "rvtransform.hpp"
#include "zerocert.hpp"

namespace zetapoly {

using Json = nlohmann::ordered_json;

inline Json to_json(const RatPoly& p) { return Json(coeff_strings(p)); }

inline Json int_json(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return Json(v.convert_to<long long>());
    return Json(v.str());
}

inline Json int_coeffs_json(const IntPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(int_json(c));
    return a;
}

inline Json to_json(const QExpansion& f) {
    std::vector<std::string> c;
    c.reserve(f.coeffs.size());
    for (const auto& v : f.coeffs) c.push_back(to_string(v));
    return Json{{"weight", f.weight}, {"coeffs", c}};
}

inline QExpansion qexpansion_from_json(const Json& j) {
    QExpansion f;
    f.weight = j.at("weight").get<int>();
    for (const auto& s : j.at("coeffs")) f.coeffs.push_back(parse_rational(s.get<std::string>()));
    return f;
}

inline Json to_json(const CFIQuotient& q, const RatPoly& rminus) {
    return Json{{"weight", q.weight}, {"w", q.weight - 2}, {"e", q.e}, {"r_minus", to_json(rminus)}, {"U", to_json(q.U)}};
}

inline Json to_json(const Certificate& c) {
    return Json{{"kind", to_string(c.kind)},
                {"passed", c.passed},
                {"expected", c.expected_roots},
                {"counted", c.counted_roots},
                {"witness", c.witness},
                {"transformed", to_json(c.transformed)}};
}

inline Json to_json(const ZetaPolyRecord& r) {
    Json trivial = Json::array();
    for (int j = 1; j <= r.trivial_zero_count(); ++j) trivial.push_back(-j);
    return Json{{"weight", r.weight},
                {"e", r.e},
                {"d", r.d},
                {"H", to_json(r.H)},
                {"Q", to_json(r.Q)},
                {"critical_line", to_string(r.critical_line)},
                {"functional_equation", functional_equation_defect(r.H, r.d, r.e).is_zero() ? "exact" : "fails"},
                {"trivial_zeros", trivial}};
}

inline Json roots_json(const std::vector<Complex>& roots) {
    Json a = Json::array();
    for (const auto& z : roots) a.push_back(Json{{"re", z.re.convert_to<double>()}, {"im", z.im.convert_to<double>()}});
    return a;
}

inline Json to_json(const HabiroTrunc& x) {
    return Json{{"level", x.level()}, {"modulus_degree", x.modulus_degree()}, {"residue", int_coeffs_json(x.residue())}};
}

inline Json to_json(const CycloInt& x) {
    return Json{{"conductor", x.conductor()}, {"coords", int_coeffs_json(x.coords())}};
}

}  // namespace zetapoly
