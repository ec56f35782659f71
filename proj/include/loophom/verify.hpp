// Consolidated consistency suite behind `loophom verify`: closed forms,
// torsion orders and primes, rank comparisons across fields, the derivation
// action, the semi-tensor comparison, the Roos transform, and the sign
// convention selection.

#ifndef LOOPHOM_VERIFY_HPP
#define LOOPHOM_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "loophom/action.hpp"
#include "loophom/presentation.hpp"

namespace loophom {

struct VerifyConfig
{
    Params params = Params::theorem1();
    SignConvention convention = SignConvention::graded;
    int max_degree = 5;  // E side; the A_X side stops at min(max_degree, 4)
    std::optional<std::vector<std::uint64_t>> theorem2_excluded;
    std::optional<RelationSet> relation_file;
};

struct CheckResult
{
    std::string name;
    bool passed;
    std::string detail;
};

struct VerifyReport
{
    std::vector<CheckResult> checks;
    std::vector<PreservationReport> preserves;
    std::vector<SemiTensorReport> semi_tensor;
    std::vector<DivisorReport> divisors;
    std::vector<SignConvention> passing_conventions;
    std::optional<SignConvention> selected_default;
    SignConvention convention = SignConvention::graded;

    bool passed() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

/// Progress lines go to `progress` when non-null.
VerifyReport run_verify(const VerifyConfig& config, std::ostream* progress = nullptr);

}  // namespace loophom

#endif
