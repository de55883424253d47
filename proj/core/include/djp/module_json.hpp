#pragma once

#include "djp/modules.hpp"

#include <stdexcept>
#include <string>

namespace djp {

struct SchemaError : std::runtime_error {
    std::string field;  // offending field, dotted path
    SchemaError(const std::string& field_, const std::string& what)
        : std::runtime_error(field_ + ": " + what), field(field_) {}
};

// {"dim": n, "labels": [...], "generators": {"x": [[..]], "y", "g", "xi",
//  "u", "v"}, "provenance": "..."} with matrices as arrays of rows and entries
// as exact rational strings "p" or "p/q". Truncated-window modules carry
// "partial": true, "depth": d and "window_degree": [..] in addition.
std::string module_to_json(const FdModule& m);
FdModule module_from_json(const std::string& text);

void save_module(const FdModule& m, const std::string& path);
FdModule load_module(const std::string& path);  // throws SchemaError / runtime_error

} // namespace djp
