// Copyright 2026 The realhaar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "realhaar/serialize.h"

#include <charconv>
#include <cmath>

#include "realhaar/errors.h"

namespace realhaar {

Json rat_json(const Rat &r) {
    return Json::array({r.get_num().get_str(), r.get_den().get_str()});
}

Rat rat_from_json(const Json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
        throw DomainError("a rational must be serialized as [\"num\", \"den\"]");
    }
    return make_rat(BigInt(j[0].get<std::string>()), BigInt(j[1].get<std::string>()));
}

Json order_json(double p) {
    if (std::isinf(p)) {
        return "inf";
    }
    return p;
}

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

Json to_json(const RealHaarSpectrum &s) {
    Json lines = Json::array();
    for (const auto &line : s.lines) {
        lines.push_back({
            {"k", line.k},
            {"eig_num", line.eigenvalue.get_num().get_str()},
            {"eig_den", line.eigenvalue.get_den().get_str()},
            {"mult", line.multiplicity.get_str()},
            {"eig_float", to_double(line.eigenvalue)},
        });
    }
    return {
        {"ensemble", "real_haar"},
        {"d", s.d},
        {"t", s.t},
        {"ambient_dim", symmetric_dimension(s.d, s.t).get_str()},
        {"mu", rat_json(complex_haar_eigenvalue(s.d, s.t))},
        {"lines", lines},
        {"trace", rat_json(s.trace())},
        {"rank", s.rank().get_str()},
    };
}

Json to_json(const EnsembleSpectrum &s, const char *ensemble) {
    Json entries = Json::array();
    for (const auto &e : s.entries) {
        entries.push_back({
            {"eig_num", e.eigenvalue.get_num().get_str()},
            {"eig_den", e.eigenvalue.get_den().get_str()},
            {"mult", e.multiplicity.get_str()},
            {"eig_float", to_double(e.eigenvalue)},
        });
    }
    return {
        {"ensemble", ensemble},
        {"d", s.d},
        {"t", s.t},
        {"ambient_dim", s.ambient_dim.get_str()},
        {"entries", entries},
        {"zero_multiplicity", s.zero_multiplicity.get_str()},
        {"trace", rat_json(s.trace())},
        {"rank", s.rank().get_str()},
    };
}

Json to_json(const RatMatrix &m) {
    Json entries = Json::array();
    for (const auto &e : m.entries()) {
        entries.push_back(rat_json(e));
    }
    return {{"n", m.size()}, {"basis", "lex"}, {"entries", entries}};
}

Json to_json(const Poly &p) {
    Json terms = Json::array();
    for (const auto &[a, c] : p.terms()) {
        terms.push_back({{"exponents", a}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    }
    return {{"num_vars", p.num_vars()}, {"degree", p.degree()}, {"terms", terms}};
}

Json to_json(const SymVector &v) {
    Json coefficients = Json::array();
    for (const auto &c : v.coefficients) {
        coefficients.push_back(rat_json(c));
    }
    return {{"d", v.d}, {"t", v.t}, {"basis", "lex"}, {"coefficients", coefficients}};
}

Json to_json(const DistanceReport &r) {
    Json out = {
        {"d", r.d},
        {"t", r.t},
        {"p", order_json(r.p)},
        {"exact_value", r.exact_value ? rat_json(*r.exact_value) : Json(nullptr)},
        {"float_value", r.float_value},
        {"method", method_name(r.method)},
        {"regime", r.regime ? Json(regime_name(*r.regime)) : Json(nullptr)},
    };
    if (r.p == 1) {
        out["trace_distance_exact"] = r.exact_value ? rat_json(*r.exact_value / 2) : Json(nullptr);
        out["trace_distance_float"] = r.float_value / 2;
    }
    out["notes"] = r.notes;
    return out;
}

Json to_json(const BoundReport &r) {
    Json out = {{"d", r.d}};
    out["t"] = r.t ? Json(*r.t) : Json(nullptr);
    out["parameter_name"] = r.parameter_name.empty() ? Json(nullptr) : Json(r.parameter_name);
    out["parameter"] = r.parameter_name.empty() ? Json(nullptr) : Json(r.parameter);
    if (r.epsilon_floor) {
        out["epsilon_floor"] = rat_json(*r.epsilon_floor);
        out["epsilon_floor_float"] = to_double(*r.epsilon_floor);
        out["copies"] = nullptr;
        out["copies_ceil"] = nullptr;
    } else {
        out["epsilon_floor"] = nullptr;
        out["epsilon_floor_float"] = nullptr;
        out["copies"] = r.copies;
        out["copies_ceil"] = static_cast<std::uint64_t>(std::ceil(r.copies));
    }
    out["notes"] = r.notes;
    return out;
}

void write_csv(std::ostream &out, const FloatMatrix &m) {
    out << (m.is_complex() ? "row,col,value,imag\n" : "row,col,value\n");
    for (std::size_t i = 0; i < m.n; i++) {
        for (std::size_t j = 0; j < m.n; j++) {
            out << i << ',' << j << ',' << format_double(m.real[i * m.n + j]);
            if (m.is_complex()) {
                out << ',' << format_double(m.imag[i * m.n + j]);
            }
            out << '\n';
        }
    }
}

std::string scan_csv_row(const DistanceReport &r) {
    std::string out = std::to_string(r.d) + "," + std::to_string(r.t) + ",";
    out += std::isinf(r.p) ? "inf" : format_double(r.p);
    if (r.exact_value) {
        out += "," + r.exact_value->get_num().get_str() + "," + r.exact_value->get_den().get_str();
    } else {
        out += ",,";
    }
    out += "," + format_double(r.float_value) + "," + method_name(r.method) + ",";
    if (r.regime) {
        out += regime_name(*r.regime);
    }
    return out;
}

}  // namespace realhaar
