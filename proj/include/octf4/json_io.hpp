#pragma once

#include <string>

#include <json.hpp>

#include "octf4/config.hpp"
#include "octf4/normalize.hpp"
#include "octf4/rootdata.hpp"

namespace octf4 {

using Json = nlohmann::json;

// Complex numbers are [re, im] pairs throughout. Parse failures throw
// Error(parse_error) naming the offending field.

Json to_json(Complex c);
Complex complex_from_json(const Json& j);

Json to_json(const ComplexOctonion& x);
ComplexOctonion octonion_from_json(const Json& j);

/// {"diag": [c, c, c], "x1": oct, "x2": oct, "x3": oct}
Json to_json(const HermMat3& a);
HermMat3 herm_from_json(const Json& j);

/// Same keys with plain reals; x1, x2, x3 are the (1,2), (1,3), (2,3) entries.
Json to_json(const RealHermMat3& x);
RealHermMat3 real_herm_from_json(const Json& j);

Json to_json(const Eigen::Matrix3cd& m);
Eigen::Matrix3cd matrix3_from_json(const Json& j);

/// {"kind": "spin9", "r", "u"}, {"kind": "spin8", "u", "v"},
/// {"kind": "orth3", "m"} or {"kind": "orth12", "m"}.
Json to_json(const SpinGenerator& g);
SpinGenerator letter_from_json(const Json& j);
Json to_json(const GeneratorWord& w);
GeneratorWord word_from_json(const Json& j);

Json to_json(const ReductionTrace& t);
ReductionTrace trace_from_json(const Json& j);

Json to_json(const Classification& c);
Json to_json(const TraceCheck& c);
Json to_json(const KernelResult& k);

/// {"tolerance": {"abs", "rel", "classify", "accept"}, "seed", "samples"};
/// missing keys keep the values of `base`. The result is validated.
Config config_from_json(const Json& j, Config base = {});
Json to_json(const Config& c);

Json to_json(const ParabolicReport& p);
Json to_json(const SmallIrrepReport& r);
/// {"w1": 52, "w2": 1274, "w3": 273, "w4": 26, "parabolic": {...}, ...}
Json dims_report();

/// Parses text, mapping nlohmann errors to Error(parse_error).
Json parse_json(const std::string& text);

}  // namespace octf4
