// primcoh: exact twisted primitive cohomology of cone-flat bundles on
// finite-dimensional invariant models. Exit codes: 0 success/pass,
// 1 mathematical failure (flatness fails, not a complex, validation fails),
// 2 input error (parse/format problems, unknown models or bundles, usage).

#include "primcoh/cone.hpp"
#include "primcoh/errors.hpp"
#include "primcoh/linalg.hpp"
#include "primcoh/model_io.hpp"
#include "primcoh/report.hpp"
#include "primcoh/sweep.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace primcoh;

constexpr int kExitPass = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitInputError = 2;

ReportFormat parse_format(const std::string& fmt) {
    if (fmt == "text") return ReportFormat::text;
    if (fmt == "json") return ReportFormat::json;
    throw ParseError("unknown --format \"" + fmt + "\" (expected text or json)");
}

// Resolution order: builtin id, file path, PRIMCOH_MODEL_PATH lookup. The
// validate command parses without the math checks so it can report them.
ModelDocument resolve_unchecked(const std::string& arg) {
    if (is_builtin_model(arg)) return builtin_model(arg);
    return load_model_unchecked(resolve_model_file(arg));
}

const BundleData& bundle_of(const ModelDocument& doc, const std::string& name) {
    const auto it = doc.bundles.find(name);
    if (it == doc.bundles.end()) {
        std::string known;
        for (const auto& [n, b] : doc.bundles) known += (known.empty() ? "" : ", ") + n;
        throw ParseError("model \"" + doc.spec.name + "\" has no bundle \"" + name +
                         "\" (available: " + known + ")");
    }
    return it->second;
}

int run_validate(const std::string& model_arg, ReportFormat fmt) {
    const ModelDocument doc = resolve_unchecked(model_arg);
    const ValidationReport report = validate_model(doc.spec);
    std::cout << render_validation(doc.spec.name, doc.spec.m, report, fmt);
    return report.passed ? kExitPass : kExitMathFail;
}

int run_check_flat(const std::string& model_arg, const std::string& bundle_name,
                   ReportFormat fmt) {
    const ModelDocument doc = resolve_model(model_arg);
    const BundleData& b = bundle_of(doc, bundle_name);
    const FlatnessReport report = check_cone_flat(b, doc.spec);
    std::cout << render_flatness(doc.spec.name, bundle_name, b.rank, report, fmt);
    return report.passed ? kExitPass : kExitMathFail;
}

int run_cohomology(const std::string& model_arg, const std::string& bundle_name,
                   ReportFormat fmt) {
    const ModelDocument doc = resolve_model(model_arg);
    const BundleData& b = bundle_of(doc, bundle_name);
    const ConeComplex c = assemble(b, doc.spec);
    if (!verify_complex(c)) {
        std::cerr << "error: A^2 != 0, the bundle is not cone-flat so cohomology is undefined\n";
        std::cerr << render_flatness(doc.spec.name, bundle_name, b.rank, c.flatness,
                                     ReportFormat::text);
        return kExitMathFail;
    }
    std::cout << render_cohomology(doc.spec.name, bundle_name, b.rank, doc.spec.eta,
                                   cohomology_dims(c), fmt);
    return kExitPass;
}

int run_sweep(const std::string& model_arg, const std::string& e_name, const std::string& l_name,
              int max_n, bool dims, ReportFormat fmt) {
    const ModelDocument doc = resolve_model(model_arg);
    const BundleData& e = bundle_of(doc, e_name);
    const BundleData& l = bundle_of(doc, l_name);
    const auto rows = sweep(e, l, doc.spec, max_n, dims, e_name, l_name);
    std::cout << render_sweep(doc.spec.name, e_name, l_name, phi_det_poly(e, l), threshold(e, l),
                              rows, fmt);
    return kExitPass;
}

int run_contract(const std::string& model_arg, const std::string& bundle_name,
                 std::optional<int> degree, ReportFormat fmt) {
    const ModelDocument doc = resolve_model(model_arg);
    const BundleData& b = bundle_of(doc, bundle_name);
    const ConeComplex c = assemble(b, doc.spec);
    if (!verify_complex(c)) {
        std::cerr << "error: A^2 != 0, the bundle is not cone-flat\n";
        return kExitMathFail;
    }
    const int m = doc.spec.m;
    if (degree && (*degree < 0 || *degree > m + 1)) {
        throw ParseError("--degree must be in 0.." + std::to_string(m + 1));
    }
    std::vector<ContractDegreeResult> results;
    bool passed = true;
    for (int i = degree ? *degree : 0; i <= (degree ? *degree : m + 1); ++i) {
        ContractDegreeResult res;
        res.degree = i;
        const auto kernel = kernel_basis(c.matrices[i]);
        res.kernel_dim = static_cast<int>(kernel.size());
        for (const auto& v : kernel) {
            const ConeElement z = cone_element_from_coordinates(m, b.rank, i, v);
            const ConeElement w = contract(c, z); // verifies apply(w) == z internally
            if (apply(b, doc.spec, w) == z) ++res.roundtrips_ok;
        }
        passed = passed && res.roundtrips_ok == res.kernel_dim;
        results.push_back(res);
    }
    std::cout << render_contract(doc.spec.name, bundle_name, results, passed, fmt);
    return passed ? kExitPass : kExitMathFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact twisted primitive cohomology of cone-flat bundles on invariant models"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "Report format: text or json")->capture_default_str();

    std::string model_arg, bundle_name, e_name, l_name;
    int max_n = 10;
    bool dims = false;
    std::optional<int> degree;

    auto* validate = app.add_subcommand("validate", "Validate a model document");
    validate->add_option("model", model_arg, "Builtin id or model file")->required();

    auto* check_flat = app.add_subcommand("check-flat", "Check the two cone-flatness conditions");
    check_flat->add_option("model", model_arg)->required();
    check_flat->add_option("--bundle", bundle_name, "Bundle name")->required();

    auto* cohomology = app.add_subcommand("cohomology", "Twisted primitive cohomology dimensions");
    cohomology->add_option("model", model_arg)->required();
    cohomology->add_option("--bundle", bundle_name, "Bundle name")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "Tensor-power sweep E (x) L^n over n");
    sweep_cmd->add_option("model", model_arg)->required();
    sweep_cmd->add_option("--e", e_name, "Name of E")->required();
    sweep_cmd->add_option("--l", l_name, "Name of the line bundle L")->required();
    sweep_cmd->add_option("--max-n", max_n, "Largest tensor power")->capture_default_str();
    sweep_cmd->add_flag("--dims", dims, "Compute cohomology dimensions per n");

    auto* contract_cmd =
        app.add_subcommand("contract", "Contract kernel elements through (Phi^-1 beta, 0)");
    contract_cmd->add_option("model", model_arg)->required();
    contract_cmd->add_option("--bundle", bundle_name, "Bundle name")->required();
    contract_cmd->add_option("--degree", degree, "Single degree (default: all)");

    auto* models = app.add_subcommand("models", "List builtin models");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitInputError;
    }

    try {
        const ReportFormat fmt = parse_format(format);
        if (validate->parsed()) return run_validate(model_arg, fmt);
        if (check_flat->parsed()) return run_check_flat(model_arg, bundle_name, fmt);
        if (cohomology->parsed()) return run_cohomology(model_arg, bundle_name, fmt);
        if (sweep_cmd->parsed()) return run_sweep(model_arg, e_name, l_name, max_n, dims, fmt);
        if (contract_cmd->parsed()) return run_contract(model_arg, bundle_name, degree, fmt);
        if (models->parsed()) {
            std::cout << render_models(fmt);
            return kExitPass;
        }
        return kExitInputError;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFail;
    } catch (const FlatnessError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFail;
    } catch (const ComplexError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFail;
    } catch (const SingularMatrixError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFail;
    } catch (const CocycleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFail;
    } catch (const Error& e) {
        // parse/format/shape/degree/rank problems are input errors
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
}
