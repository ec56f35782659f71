// JSON and fixed-width text renderings of the computation results.

#ifndef LOOPHOM_REPORT_HPP
#define LOOPHOM_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "loophom/action.hpp"
#include "loophom/gradedz.hpp"
#include "loophom/numtheory.hpp"
#include "loophom/series.hpp"

namespace loophom {

/// JSON number when it fits in a signed 64-bit integer, decimal string otherwise.
nlohmann::json json_integer(const mpz_class& v);

nlohmann::json to_json(const Params& p);
nlohmann::json to_json(const std::vector<CoeffEntry>& seq);
nlohmann::json to_json(const TorsionReport& rep);
nlohmann::json to_json(const PrimeClassification& pc);
nlohmann::json to_json(const std::vector<CensusRow>& rows);
nlohmann::json to_json(const PowerSeries& s);
nlohmann::json to_json(const PreservationReport& rep);
nlohmann::json to_json(const SemiTensorReport& rep);
nlohmann::json to_json(const DivisorReport& rep);

std::string render_text(const std::vector<CoeffEntry>& seq);
std::string render_text(const TorsionReport& rep);
std::string render_text(const PrimeClassification& pc);
std::string render_text(const std::vector<CensusRow>& rows);

}  // namespace loophom

#endif
