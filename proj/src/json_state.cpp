#include "spinorqc/json_state.hpp"

#include "spinorqc/exprs.hpp"
#include "spinorqc/format.hpp"

#include <json.hpp>

#include <stdexcept>
#include <utility>

namespace spinorqc {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Scalar scalar_of_text(const std::string& text, const std::string& field) {
    Value v;
    try {
        v = eval_exact(parse_expression(text));
    } catch (const std::exception& ex) {
        throw std::runtime_error(field + ": " + ex.what());
    }
    if (const auto* s = std::get_if<Scalar>(&v.v)) return *s;
    if (const auto* m = std::get_if<Multivector<Scalar>>(&v.v)) {
        if (*m == grade_project(*m, 0)) return m->scalar_part();
    }
    throw std::runtime_error(field + ": '" + text + "' is not a scalar");
}

std::string string_field(const json& j, const std::string& key) {
    if (!j.contains(key)) throw std::runtime_error("missing field '" + key + "'");
    if (!j.at(key).is_string()) throw std::runtime_error("field '" + key + "' must be a string");
    return j.at(key).get<std::string>();
}

json parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& ex) {
        throw std::runtime_error(std::string("invalid JSON: ") + ex.what());
    }
    if (!j.is_object()) throw std::runtime_error("state document must be a JSON object");
    return j;
}

QubitAmplitudes qubit_of_json(const json& j) {
    return QubitAmplitudes{scalar_of_text(string_field(j, "a1"), "a1"),
                           scalar_of_text(string_field(j, "a2"), "a2"),
                           scalar_of_text(string_field(j, "a3"), "a3"),
                           scalar_of_text(string_field(j, "a4"), "a4")};
}

}  // namespace

QubitAmplitudes read_qubit_json(const std::string& text) {
    return qubit_of_json(parse_document(text));
}

MultiQubitAmplitudes read_state_json(const std::string& text) {
    const json j = parse_document(text);
    if (j.contains("a1")) {
        const QubitAmplitudes q = qubit_of_json(j);
        return MultiQubitAmplitudes{1, {CScalar(q.a1, q.a2), CScalar(q.a3, q.a4)}};
    }
    if (!j.contains("n") || !j.at("n").is_number_integer())
        throw std::runtime_error("field 'n' must be an integer");
    const long long n = j.at("n").get<long long>();
    if (n < 1 || n > 10) throw std::runtime_error("n must be between 1 and 10");
    if (!j.contains("amps") || !j.at("amps").is_array())
        throw std::runtime_error("field 'amps' must be an array");
    const auto& amps = j.at("amps");
    const std::size_t want = std::size_t(1) << n;
    if (amps.size() != want)
        throw std::runtime_error("amps must have " + std::to_string(want) + " entries for n = " +
                                 std::to_string(n));
    MultiQubitAmplitudes s;
    s.n = int(n);
    s.amps.reserve(want);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const auto& pair = amps[i];
        const std::string field = "amps[" + std::to_string(i) + "]";
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
            throw std::runtime_error(field + " must be a pair of strings [re, im]");
        s.amps.push_back(CScalar(scalar_of_text(pair[0].get<std::string>(), field + "[0]"),
                                 scalar_of_text(pair[1].get<std::string>(), field + "[1]")));
    }
    return s;
}

std::string qubit_json(const QubitAmplitudes& q) {
    ordered_json j;
    j["a1"] = to_string(q.a1);
    j["a2"] = to_string(q.a2);
    j["a3"] = to_string(q.a3);
    j["a4"] = to_string(q.a4);
    return j.dump(2);
}

std::string state_json(const MultiQubitAmplitudes& s) {
    if (s.n == 1 && s.amps.size() == 2)
        return qubit_json(
            QubitAmplitudes{s.amps[0].re, s.amps[0].im, s.amps[1].re, s.amps[1].im});
    ordered_json j;
    j["n"] = s.n;
    ordered_json amps = ordered_json::array();
    for (const auto& c : s.amps) amps.push_back({to_string(c.re), to_string(c.im)});
    j["amps"] = std::move(amps);
    return j.dump(2);
}

}  // namespace spinorqc
