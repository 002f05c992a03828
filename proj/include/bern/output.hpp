#pragma once

/*
 * CLI-facing output records. The text forms of Rational and
 * RationalPolynomial are the round-trip contract; JSON lines keep the key
 * order n, kind, method, value, elapsed_ns.
 */

#include "bern/bernoulli.hpp"

#include <string>

namespace bern {

struct OutputRecord {
    long long n = 0;
    std::string kind;    // "number" or "polynomial"
    std::string method;  // engine name
    std::string value;   // canonical text form
    long long elapsed_ns = 0;
};

OutputRecord make_record(const BernoulliResult& result, long long elapsed_ns);

// e.g. {"n":12,"kind":"number","method":"stirling","value":"-691/2730","elapsed_ns":0}
std::string to_json_line(const OutputRecord& record);

// "<method> <value>"
std::string to_text_line(const OutputRecord& record);

}  // namespace bern
