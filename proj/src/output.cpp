#include "bern/output.hpp"

#include <json.hpp>

namespace bern {

OutputRecord make_record(const BernoulliResult& result, long long elapsed_ns) {
    OutputRecord rec;
    rec.n = result.n;
    rec.method = std::string(method_name(result.method));
    if (const auto* num = std::get_if<Rational>(&result.value)) {
        rec.kind = "number";
        rec.value = num->str();
    } else {
        rec.kind = "polynomial";
        rec.value = std::get<RationalPolynomial>(result.value).str();
    }
    rec.elapsed_ns = elapsed_ns;
    return rec;
}

std::string to_json_line(const OutputRecord& record) {
    nlohmann::ordered_json j;
    j["n"] = record.n;
    j["kind"] = record.kind;
    j["method"] = record.method;
    j["value"] = record.value;
    j["elapsed_ns"] = record.elapsed_ns;
    return j.dump();
}

std::string to_text_line(const OutputRecord& record) { return record.method + " " + record.value; }

}  // namespace bern
