#include "noderel/json_io.hpp"

#include <stdexcept>

namespace noderel {

namespace {

const char* kind_name(ExtremumKind k) { return k == ExtremumKind::Max ? "max" : "min"; }

}  // namespace

Json coeffs_to_json(const Polynomial& a) {
    Json out = Json::array();
    for (const auto& c : a.coeffs()) {
        out.push_back(c.get_str());
    }
    return out;
}

Polynomial coeffs_from_json(const Json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("coefficient list must be a JSON array");
    }
    std::vector<Integer> c;
    c.reserve(j.size());
    for (const auto& x : j) {
        if (x.is_string()) {
            Integer v;
            if (v.set_str(x.get<std::string>(), 10) != 0) {
                throw std::invalid_argument("bad integer coefficient '" + x.get<std::string>() + "'");
            }
            c.push_back(std::move(v));
        } else if (x.is_number_integer()) {
            c.emplace_back(x.get<long>());
        } else {
            throw std::invalid_argument("coefficients must be integers or decimal strings");
        }
    }
    return Polynomial(std::move(c));
}

Json to_json(const ReliabilityPolynomial& r) {
    Json out;
    out["order"] = r.order();
    out["connected"] = r.connected();
    out["coeffs"] = coeffs_to_json(r.poly());
    return out;
}

ReliabilityPolynomial reliability_from_json(const Json& j) {
    return ReliabilityPolynomial(coeffs_from_json(j.at("coeffs")), j.at("order").get<std::uint64_t>(),
                                 j.at("connected").get<bool>());
}

Json to_json(const IsolatingInterval& i) {
    Json out;
    out["lo"] = to_string(i.lo);
    out["hi"] = to_string(i.hi);
    return out;
}

Json to_json(const ShapeReport& report) {
    Json out;
    Json extrema = Json::array();
    for (const auto& e : report.extrema) {
        Json item = to_json(e.location);
        item["kind"] = kind_name(e.kind);
        extrema.push_back(std::move(item));
    }
    Json decreases = Json::array();
    for (const auto& d : report.decrease_intervals) {
        Json item;
        item["start"] = d.start ? to_json(*d.start) : Json("0");
        item["end"] = d.end ? to_json(*d.end) : Json("1");
        decreases.push_back(std::move(item));
    }
    Json inflections = Json::array();
    for (const auto& i : report.inflections) {
        inflections.push_back(to_json(i));
    }
    out["extrema"] = std::move(extrema);
    out["decrease_intervals"] = std::move(decreases);
    out["inflections"] = std::move(inflections);
    out["counts"] = {{"num_extrema", report.extrema.size()},
                     {"num_decrease_intervals", report.num_decrease_intervals()},
                     {"num_inflections", report.num_inflections()}};
    return out;
}

Json to_json(const ConstructionTrace& trace, bool with_timings) {
    Json steps = Json::array();
    for (const auto& s : trace.steps) {
        Json item;
        item["step"] = s.index;
        item["operation"] = to_string(s.kind);
        item["l"] = s.l;
        item["order"] = s.order;
        item["degree"] = s.degree;
        item["num_extrema"] = s.num_extrema;
        item["num_decrease_intervals"] = s.num_decrease_intervals;
        item["num_inflections"] = s.num_inflections;
        item["rejected_l"] = s.rejected;
        if (with_timings) {
            item["wall_ms"] = s.wall_ms;
        }
        steps.push_back(std::move(item));
    }
    return Json{{"steps", std::move(steps)}};
}

}  // namespace noderel
