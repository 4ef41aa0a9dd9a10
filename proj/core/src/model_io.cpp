#include "primcoh/model_io.hpp"

#include "primcoh/errors.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace primcoh {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail_parse_at(const std::string& text, std::size_t byte, const std::string& msg) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    std::ostringstream os;
    os << "parse error at line " << line << ", column " << col << ": " << msg;
    throw ParseError(os.str());
}

const json& field(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw FormatError(where + ": missing required field \"" + key + "\"");
    return *it;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : known) ok = ok || it.key() == k;
        if (!ok) throw FormatError(where + ": unknown field \"" + it.key() + "\"");
    }
}

Rational coeff_of(const json& j, const std::string& where) {
    if (!j.is_string()) {
        throw ParseError(where + ": coefficients must be exact rational strings like \"3\" or "
                                 "\"-2/5\"");
    }
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

int int_of(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw FormatError(where + ": expected an integer");
    return j.get<int>();
}

std::vector<TwoFormTerm> two_form_terms_of(const json& j, const std::string& where) {
    if (!j.is_array()) throw FormatError(where + ": expected an array of [coeff, i, j] terms");
    std::vector<TwoFormTerm> terms;
    for (std::size_t t = 0; t < j.size(); ++t) {
        const json& term = j[t];
        const std::string at = where + ", term " + std::to_string(t + 1);
        if (!term.is_array() || term.size() != 3) {
            throw FormatError(at + ": expected [coeff, i, j]");
        }
        terms.push_back({coeff_of(term[0], at), int_of(term[1], at), int_of(term[2], at)});
    }
    return terms;
}

std::vector<OneFormTerm> one_form_terms_of(const json& j, const std::string& where) {
    if (!j.is_array()) throw FormatError(where + ": expected an array of [coeff, i] terms");
    std::vector<OneFormTerm> terms;
    for (std::size_t t = 0; t < j.size(); ++t) {
        const json& term = j[t];
        const std::string at = where + ", term " + std::to_string(t + 1);
        if (!term.is_array() || term.size() != 2) {
            throw FormatError(at + ": expected [coeff, i]");
        }
        terms.push_back({coeff_of(term[0], at), int_of(term[1], at)});
    }
    return terms;
}

BundleData bundle_of(const json& j, int m, const std::string& where) {
    if (!j.is_object()) throw FormatError(where + ": expected an object");
    reject_unknown_keys(j, {"rank", "A", "Phi"}, where);
    const int r = int_of(field(j, "rank", where), where + ".rank");
    if (r < 1) throw FormatError(where + ": rank must be >= 1");

    BundleData b = trivial_bundle(m, r);

    const json& a = field(j, "A", where);
    if (!a.is_array() || static_cast<int>(a.size()) != r) {
        throw FormatError(where + ".A: expected " + std::to_string(r) + " rows");
    }
    for (int i = 0; i < r; ++i) {
        if (!a[i].is_array() || static_cast<int>(a[i].size()) != r) {
            throw FormatError(where + ".A: row " + std::to_string(i + 1) + " must have " +
                              std::to_string(r) + " entries");
        }
        for (int jj = 0; jj < r; ++jj) {
            const std::string at =
                where + ".A[" + std::to_string(i + 1) + "][" + std::to_string(jj + 1) + "]";
            b.a(i, jj) = one_form(m, one_form_terms_of(a[i][jj], at));
        }
    }

    const json& phi = field(j, "Phi", where);
    if (!phi.is_array() || static_cast<int>(phi.size()) != r) {
        throw FormatError(where + ".Phi: expected " + std::to_string(r) + " rows");
    }
    for (int i = 0; i < r; ++i) {
        if (!phi[i].is_array() || static_cast<int>(phi[i].size()) != r) {
            throw FormatError(where + ".Phi: row " + std::to_string(i + 1) + " must have " +
                              std::to_string(r) + " entries");
        }
        for (int jj = 0; jj < r; ++jj) {
            const std::string at =
                where + ".Phi[" + std::to_string(i + 1) + "][" + std::to_string(jj + 1) + "]";
            b.phi(i, jj) = coeff_of(phi[i][jj], at);
        }
    }
    return b;
}

} // namespace

ModelDocument parse_model_unchecked(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail_parse_at(text, e.byte > 0 ? e.byte - 1 : 0, e.what());
    }
    if (!j.is_object()) throw FormatError("model document must be a JSON object");
    reject_unknown_keys(j, {"name", "m", "d", "eta", "symplectic", "bundles"}, "model");

    ModelDocument doc;
    const json& name = field(j, "name", "model");
    if (!name.is_string()) throw FormatError("model.name must be a string");
    doc.spec.name = name.get<std::string>();

    doc.spec.m = int_of(field(j, "m", "model"), "model.m");
    if (doc.spec.m < 1 || doc.spec.m > kMaxGenerators) {
        throw FormatError("model.m must be in 1.." + std::to_string(kMaxGenerators));
    }
    const int m = doc.spec.m;

    doc.spec.d.assign(m, Form(m, 2));
    if (j.contains("d")) {
        const json& d = j["d"];
        if (!d.is_array()) throw FormatError("model.d must be an array of {gen, terms} entries");
        std::vector<bool> seen(m + 1, false);
        for (std::size_t k = 0; k < d.size(); ++k) {
            const std::string where = "model.d[" + std::to_string(k + 1) + "]";
            if (!d[k].is_object()) throw FormatError(where + ": expected {gen, terms}");
            reject_unknown_keys(d[k], {"gen", "terms"}, where);
            const int gen = int_of(field(d[k], "gen", where), where + ".gen");
            if (gen < 1 || gen > m) {
                throw FormatError(where + ": gen " + std::to_string(gen) + " outside 1.." +
                                  std::to_string(m));
            }
            if (seen[gen]) throw FormatError(where + ": duplicate entry for generator " +
                                             std::to_string(gen));
            seen[gen] = true;
            doc.spec.d[gen - 1] =
                two_form(m, two_form_terms_of(field(d[k], "terms", where), where + ".terms"));
        }
    }

    doc.spec.eta = j.contains("eta")
                       ? two_form(m, two_form_terms_of(j["eta"], "model.eta"))
                       : Form(m, 2);
    doc.spec.symplectic = false;
    if (j.contains("symplectic")) {
        if (!j["symplectic"].is_boolean()) throw FormatError("model.symplectic must be a boolean");
        doc.spec.symplectic = j["symplectic"].get<bool>();
    }

    if (j.contains("bundles")) {
        const json& bundles = j["bundles"];
        if (!bundles.is_object()) throw FormatError("model.bundles must be an object");
        for (auto it = bundles.begin(); it != bundles.end(); ++it) {
            doc.bundles.emplace(it.key(), bundle_of(it.value(), m, "bundle \"" + it.key() + "\""));
        }
    }
    return doc;
}

ModelDocument parse_model(const std::string& text) {
    ModelDocument doc = parse_model_unchecked(text);
    const ValidationReport v = validate_model(doc.spec);
    if (!v.passed) {
        std::string what = "model \"" + doc.spec.name + "\" failed validation:";
        for (const auto& c : v.checks) {
            if (!c.passed) what += " [" + c.name + "] " + c.detail;
        }
        throw ValidationError(what);
    }
    return doc;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open model file \"" + path + "\"");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

ModelDocument load_model(const std::string& path) {
    return parse_model(read_file(path));
}

ModelDocument load_model_unchecked(const std::string& path) {
    return parse_model_unchecked(read_file(path));
}

std::string serialize_model(const ModelDocument& doc) {
    ordered_json j;
    j["name"] = doc.spec.name;
    j["m"] = doc.spec.m;

    ordered_json d = ordered_json::array();
    for (int k = 0; k < doc.spec.m; ++k) {
        if (doc.spec.d[k].is_zero()) continue;
        ordered_json entry;
        entry["gen"] = k + 1;
        ordered_json terms = ordered_json::array();
        for (const auto& t : two_form_terms(doc.spec.d[k])) {
            terms.push_back({to_string(t.coeff), t.i, t.j});
        }
        entry["terms"] = terms;
        d.push_back(entry);
    }
    j["d"] = d;

    ordered_json eta = ordered_json::array();
    for (const auto& t : two_form_terms(doc.spec.eta)) {
        eta.push_back({to_string(t.coeff), t.i, t.j});
    }
    j["eta"] = eta;
    j["symplectic"] = doc.spec.symplectic;

    ordered_json bundles = ordered_json::object();
    for (const auto& [name, b] : doc.bundles) {
        ordered_json bj;
        bj["rank"] = b.rank;
        ordered_json a = ordered_json::array();
        for (int i = 0; i < b.rank; ++i) {
            ordered_json row = ordered_json::array();
            for (int jj = 0; jj < b.rank; ++jj) {
                ordered_json terms = ordered_json::array();
                for (const auto& t : one_form_terms(b.a(i, jj))) {
                    terms.push_back({to_string(t.coeff), t.i});
                }
                row.push_back(terms);
            }
            a.push_back(row);
        }
        bj["A"] = a;
        ordered_json phi = ordered_json::array();
        for (int i = 0; i < b.rank; ++i) {
            ordered_json row = ordered_json::array();
            for (int jj = 0; jj < b.rank; ++jj) row.push_back(to_string(b.phi(i, jj)));
            phi.push_back(row);
        }
        bj["Phi"] = phi;
        bundles[name] = bj;
    }
    j["bundles"] = bundles;
    return j.dump(2) + "\n";
}

namespace {

struct Builtin {
    const char* id;
    const char* summary;
    const char* text;
};

// Shipped example models. t4/t6 carry nondegenerate eta (every cone-flat
// bundle there has Phi = 0, since eta is not exact); kt/heis3xs1 carry exact
// eta together with invertible-Phi line bundles, which is where the vanishing
// sweep has content.
constexpr Builtin kBuiltins[] = {
    {"t4", "abelian m=4, eta = e1^e3 + e2^e4 (symplectic)", R"json({
  "name": "t4",
  "m": 4,
  "d": [],
  "eta": [["1", 1, 3], ["1", 2, 4]],
  "symplectic": true,
  "bundles": {
    "trivial": {"rank": 1, "A": [[[]]], "Phi": [["0"]]},
    "flat_e1": {"rank": 1, "A": [[[["1", 1]]]], "Phi": [["0"]]},
    "flat2": {"rank": 2,
              "A": [[[], [["1", 1], ["-1", 2]]], [[], []]],
              "Phi": [["0", "0"], ["0", "0"]]}
  }
})json"},
    {"t6", "abelian m=6, eta = e1^e4 + e2^e5 + e3^e6 (symplectic)", R"json({
  "name": "t6",
  "m": 6,
  "d": [],
  "eta": [["1", 1, 4], ["1", 2, 5], ["1", 3, 6]],
  "symplectic": true,
  "bundles": {
    "trivial": {"rank": 1, "A": [[[]]], "Phi": [["0"]]},
    "flat_e1": {"rank": 1, "A": [[[["1", 1]]]], "Phi": [["0"]]}
  }
})json"},
    {"kt", "Kodaira-Thurston m=4, d e4 = e1^e2, eta = e1^e2 (exact)", R"json({
  "name": "kt",
  "m": 4,
  "d": [{"gen": 4, "terms": [["1", 1, 2]]}],
  "eta": [["1", 1, 2]],
  "symplectic": false,
  "bundles": {
    "trivial": {"rank": 1, "A": [[[]]], "Phi": [["0"]]},
    "L": {"rank": 1, "A": [[[["-1", 4]]]], "Phi": [["1"]]},
    "E2": {"rank": 2,
           "A": [[[], [["-1", 4]]], [[], []]],
           "Phi": [["0", "1"], ["0", "0"]]}
  }
})json"},
    {"heis3xs1", "Heisenberg x S1, m=4, d e3 = e1^e2, eta = e1^e2 (exact)", R"json({
  "name": "heis3xs1",
  "m": 4,
  "d": [{"gen": 3, "terms": [["1", 1, 2]]}],
  "eta": [["1", 1, 2]],
  "symplectic": false,
  "bundles": {
    "trivial": {"rank": 1, "A": [[[]]], "Phi": [["0"]]},
    "L": {"rank": 1, "A": [[[["-1", 3]]]], "Phi": [["1"]]}
  }
})json"},
};

} // namespace

std::vector<std::string> builtin_models() {
    std::vector<std::string> out;
    for (const auto& b : kBuiltins) out.push_back(b.id);
    return out;
}

bool is_builtin_model(const std::string& id) {
    for (const auto& b : kBuiltins) {
        if (id == b.id) return true;
    }
    return false;
}

ModelDocument builtin_model(const std::string& id) {
    for (const auto& b : kBuiltins) {
        if (id == b.id) return parse_model(b.text);
    }
    throw Error("unknown builtin model \"" + id + "\"");
}

std::string builtin_model_summary(const std::string& id) {
    for (const auto& b : kBuiltins) {
        if (id == b.id) return b.summary;
    }
    throw Error("unknown builtin model \"" + id + "\"");
}

std::string resolve_model_file(const std::string& arg) {
    if (std::filesystem::exists(arg)) return arg;
    if (const char* search = std::getenv("PRIMCOH_MODEL_PATH")) {
        std::string paths(search);
        std::size_t start = 0;
        while (start <= paths.size()) {
            const std::size_t end = paths.find(':', start);
            const std::string dir =
                paths.substr(start, end == std::string::npos ? std::string::npos : end - start);
            if (!dir.empty()) {
                for (const std::string& candidate : {dir + "/" + arg, dir + "/" + arg + ".json"}) {
                    if (std::filesystem::exists(candidate)) return candidate;
                }
            }
            if (end == std::string::npos) break;
            start = end + 1;
        }
    }
    throw ParseError("model \"" + arg +
                     "\" not found: not a builtin, not a file, not on PRIMCOH_MODEL_PATH");
}

ModelDocument resolve_model(const std::string& arg) {
    if (is_builtin_model(arg)) return builtin_model(arg);
    return load_model(resolve_model_file(arg));
}

} // namespace primcoh
