#pragma once

#include <string>

#include <json.hpp>

#include "energylab/bigfloat.hpp"
#include "energylab/bsg.hpp"
#include "energylab/decompose.hpp"
#include "energylab/extract.hpp"
#include "energylab/fpgrowth.hpp"
#include "energylab/incidence.hpp"

namespace energylab {

// All reports use ordered JSON so identical configs yield byte-identical
// output.
using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "energylab-report/1";

std::string z_str(const mpz_class& v);
std::string q_str(const mpq_class& v);

Json set_summary(const FiniteSet& s, std::size_t element_cap = 4096);
Json certificate_json(const ExtractionCertificate& cert, bool include_pairs = false);
Json steps_json(const std::vector<DecompositionStep>& steps);
Json bw_json(const BwDecomposition& d);
Json balanced_json(const BalancedDecomposition& d, const FiniteSet& A);
Json product_json(const ProductPipelineResult& d, const FiniteSet& A);
Json translate_json(const TranslateDecomposition& d);
Json rset_json(const RsetDecomposition& d);
Json bsg_json(const BsgCertificate& cert, const BsgVerification* ver);
Json growth_json(const GrowthReport& g);

/// Wraps a payload with the schema id and the replayable config echo.
Json wrap_report(const Json& config_echo, const Json& results,
                 const std::vector<std::string>& warnings = {});

}  // namespace energylab
