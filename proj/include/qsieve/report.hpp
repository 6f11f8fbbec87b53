#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qsieve/analysis.hpp"
#include "qsieve/characters.hpp"
#include "qsieve/exponent.hpp"
#include "qsieve/regime.hpp"
#include "qsieve/sieve.hpp"

namespace qsieve {

using Json = nlohmann::ordered_json;

Json to_json(const SieveReport& r);
Json to_json(const DualityReport& r);
Json to_json(const TransformationCheck& r);
Json to_json(const QuadraticFormCheck& r);
Json to_json(const PoissonCheckReport& r);
Json to_json(const ThetaSum& r);
Json to_json(const MatchReport& r);
Json to_json(const ExponentTrace& r);
Json to_json(const RegimeResult& r);
Json complex_json(const ComplexValue& z);

// Insertion-ordered keys, two-space indent, floats as %.12e, trailing newline.
// Equal values always give identical bytes.
std::string dump_json(const Json& j);

// One header row, then one row per report; all reports must share a kind and
// the same bound-term names.
std::string sieve_csv(const std::vector<SieveReport>& reports);
std::vector<std::string> sieve_csv_header(const SieveReport& prototype);

// Writes the whole file; throws ComputationError on failure.
void write_file(const std::string& path, const std::string& content);

// $QUARTIC_SIEVE_OUT if set and non-empty, else ".".
std::string default_output_dir();

}  // namespace qsieve
