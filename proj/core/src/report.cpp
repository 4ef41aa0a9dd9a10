#include "primcoh/report.hpp"

#include "primcoh/model_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace primcoh {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dims_csv(const std::vector<int>& dims) {
    std::string s;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(dims[i]);
    }
    return s;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

} // namespace

std::string render_validation(const std::string& model_name, int m, const ValidationReport& report,
                              ReportFormat format) {
    if (format == ReportFormat::json) {
        ordered_json j;
        j["command"] = "validate";
        j["model"] = model_name;
        j["m"] = m;
        ordered_json checks = ordered_json::array();
        for (const auto& c : report.checks) {
            checks.push_back({{"name", c.name}, {"pass", c.passed}, {"detail", c.detail}});
        }
        j["checks"] = checks;
        j["pass"] = report.passed;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "model " << model_name << ": m = " << m << "\n";
    for (const auto& c : report.checks) {
        os << "  " << c.name << ": " << (c.passed ? "pass" : "FAIL") << " (" << c.detail << ")\n";
    }
    os << "result: " << (report.passed ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string render_flatness(const std::string& model_name, const std::string& bundle_name,
                            int rank, const FlatnessReport& report, ReportFormat format) {
    bool curvature_ok = true, commute_ok = true;
    for (const auto& f : report.failures) {
        (f.condition == 1 ? curvature_ok : commute_ok) = false;
    }
    if (format == ReportFormat::json) {
        ordered_json j;
        j["command"] = "check-flat";
        j["model"] = model_name;
        j["bundle"] = bundle_name;
        j["rank"] = rank;
        j["curvature_condition"] = curvature_ok;
        j["commutation_condition"] = commute_ok;
        ordered_json failures = ordered_json::array();
        for (const auto& f : report.failures) failures.push_back(to_string(f));
        j["failures"] = failures;
        j["flat"] = report.passed;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "model " << model_name << ", bundle " << bundle_name << " (rank " << rank << ")\n";
    os << "  curvature + eta*Phi = 0: " << (curvature_ok ? "pass" : "FAIL") << "\n";
    os << "  A*Phi - Phi*A = 0: " << (commute_ok ? "pass" : "FAIL") << "\n";
    for (const auto& f : report.failures) os << "    " << to_string(f) << "\n";
    os << "result: " << (report.passed ? "FLAT" : "NOT FLAT") << "\n";
    return os.str();
}

std::string render_cohomology(const std::string& model_name, const std::string& bundle_name,
                              int rank, const Form& eta, const std::vector<int>& dims,
                              ReportFormat format) {
    bool vanishes = true;
    int euler = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        vanishes = vanishes && dims[i] == 0;
        euler += (i % 2 == 0 ? dims[i] : -dims[i]);
    }
    if (format == ReportFormat::json) {
        ordered_json j;
        j["command"] = "cohomology";
        j["model"] = model_name;
        j["bundle"] = bundle_name;
        j["rank"] = rank;
        j["eta"] = to_string(eta);
        j["dims"] = dims;
        j["euler"] = euler;
        j["vanishes"] = vanishes;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "model " << model_name << ", bundle " << bundle_name << " (rank " << rank << "), eta = "
       << to_string(eta) << "\n";
    os << "degree  dim\n";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        os << pad(std::to_string(i), 6) << "  " << dims[i] << "\n";
    }
    os << "euler characteristic: " << euler << "\n";
    os << "VANISHES: " << (vanishes ? "yes" : "no") << "\n";
    return os.str();
}

std::string render_sweep(const std::string& model_name, const std::string& e_name,
                         const std::string& l_name, const Polynomial& det_poly,
                         const std::optional<int>& threshold_n, const std::vector<SweepRow>& rows,
                         ReportFormat format) {
    if (format == ReportFormat::json) {
        ordered_json j;
        j["command"] = "sweep";
        j["model"] = model_name;
        j["e"] = e_name;
        j["l"] = l_name;
        j["det_poly"] = to_string(det_poly);
        if (threshold_n) {
            j["threshold"] = *threshold_n;
        } else {
            j["threshold"] = "never";
        }
        ordered_json rj = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json r;
            r["n"] = row.n;
            r["det"] = to_string(row.det_phi);
            r["invertible"] = row.invertible;
            if (row.dims) r["dims"] = *row.dims;
            rj.push_back(r);
        }
        j["rows"] = rj;
        return j.dump(2) + "\n";
    }

    const bool with_dims =
        std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.dims.has_value(); });
    std::size_t wn = 1, wd = 3;
    for (const auto& row : rows) {
        wn = std::max(wn, std::to_string(row.n).size());
        wd = std::max(wd, to_string(row.det_phi).size());
    }

    std::ostringstream os;
    os << "model " << model_name << ", E = " << e_name << ", L = " << l_name << "\n";
    os << "det(Phi_n) = " << to_string(det_poly) << "\n";
    os << "threshold: " << (threshold_n ? std::to_string(*threshold_n) : "never") << "\n";
    os << pad("n", wn) << "  " << pad("det", wd) << "  invertible";
    if (with_dims) os << "  dims";
    os << "\n";
    for (const auto& row : rows) {
        os << pad(std::to_string(row.n), wn) << "  " << pad(to_string(row.det_phi), wd) << "  "
           << pad(row.invertible ? "yes" : "no", 10);
        if (row.dims) os << "  " << dims_csv(*row.dims);
        os << "\n";
    }
    return os.str();
}

std::string render_contract(const std::string& model_name, const std::string& bundle_name,
                            const std::vector<ContractDegreeResult>& results, bool passed,
                            ReportFormat format) {
    if (format == ReportFormat::json) {
        ordered_json j;
        j["command"] = "contract";
        j["model"] = model_name;
        j["bundle"] = bundle_name;
        ordered_json rj = ordered_json::array();
        for (const auto& r : results) {
            rj.push_back({{"degree", r.degree},
                          {"kernel_dim", r.kernel_dim},
                          {"roundtrips_ok", r.roundtrips_ok}});
        }
        j["degrees"] = rj;
        j["pass"] = passed;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "model " << model_name << ", bundle " << bundle_name << "\n";
    for (const auto& r : results) {
        os << "degree " << r.degree << ": kernel dimension " << r.kernel_dim << ", round-trips "
           << r.roundtrips_ok << "/" << r.kernel_dim << "\n";
    }
    os << "result: " << (passed ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string render_models(ReportFormat format) {
    const auto ids = builtin_models();
    if (format == ReportFormat::json) {
        ordered_json j;
        j["command"] = "models";
        ordered_json list = ordered_json::array();
        for (const auto& id : ids) {
            list.push_back({{"id", id}, {"summary", builtin_model_summary(id)}});
        }
        j["models"] = list;
        return j.dump(2) + "\n";
    }
    std::size_t w = 0;
    for (const auto& id : ids) w = std::max(w, id.size());
    std::ostringstream os;
    for (const auto& id : ids) {
        os << pad(id, w) << "  " << builtin_model_summary(id) << "\n";
    }
    return os.str();
}

} // namespace primcoh
