#pragma once

#include "primcoh/bundle.hpp"
#include "primcoh/model.hpp"
#include "primcoh/polynomial.hpp"
#include "primcoh/sweep.hpp"

#include <optional>
#include <string>
#include <vector>

namespace primcoh {

enum class ReportFormat { text, json };

// Deterministic report rendering: byte-identical output for identical inputs.
// The json variants serialize the same numbers as machine-readable documents,
// with rationals as exact strings.

std::string render_validation(const std::string& model_name, int m, const ValidationReport& report,
                              ReportFormat format);

std::string render_flatness(const std::string& model_name, const std::string& bundle_name,
                            int rank, const FlatnessReport& report, ReportFormat format);

std::string render_cohomology(const std::string& model_name, const std::string& bundle_name,
                              int rank, const Form& eta, const std::vector<int>& dims,
                              ReportFormat format);

std::string render_sweep(const std::string& model_name, const std::string& e_name,
                         const std::string& l_name, const Polynomial& det_poly,
                         const std::optional<int>& threshold_n, const std::vector<SweepRow>& rows,
                         ReportFormat format);

struct ContractDegreeResult {
    int degree = 0;
    int kernel_dim = 0;
    int roundtrips_ok = 0;
};

std::string render_contract(const std::string& model_name, const std::string& bundle_name,
                            const std::vector<ContractDegreeResult>& results, bool passed,
                            ReportFormat format);

std::string render_models(ReportFormat format);

} // namespace primcoh
