#pragma once

#include "primcoh/bundle.hpp"
#include "primcoh/model.hpp"

#include <map>
#include <string>
#include <vector>

namespace primcoh {

// One model file: a validated ModelSpec plus its named bundles.
struct ModelDocument {
    ModelSpec spec;
    std::map<std::string, BundleData> bundles;

    bool operator==(const ModelDocument&) const = default;
};

// Parses the JSON model document (structure checked, coefficients exact
// rational strings) without running the mathematical validation. ParseError
// on malformed JSON or coefficients, FormatError on structural problems.
ModelDocument parse_model_unchecked(const std::string& text);

// parse_model_unchecked plus validate_model; ValidationError listing the
// failing conditions when the model is mathematically broken. Rejects rather
// than repairs.
ModelDocument parse_model(const std::string& text);

// Reads and parses a file; ParseError when the file cannot be read.
ModelDocument load_model(const std::string& path);
ModelDocument load_model_unchecked(const std::string& path);

// Canonical JSON text; parse_model(serialize_model(doc)) == doc.
std::string serialize_model(const ModelDocument& doc);

// Built-in example library. Every identifier loads, validates, and ships at
// least one cone-flat bundle.
std::vector<std::string> builtin_models();
bool is_builtin_model(const std::string& id);
ModelDocument builtin_model(const std::string& id); // Error on unknown id
std::string builtin_model_summary(const std::string& id);

// Model argument resolution used by the CLI: builtin id, then an existing
// file path, then <dir>/<name> and <dir>/<name>.json over the ':'-separated
// directories in PRIMCOH_MODEL_PATH. ParseError when nothing matches.
ModelDocument resolve_model(const std::string& arg);

// The file-lookup part of resolve_model (everything except builtin ids);
// returns the path of the first match, ParseError when nothing matches.
std::string resolve_model_file(const std::string& arg);

} // namespace primcoh
