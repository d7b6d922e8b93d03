#pragma once

#include <string>

#include "json.hpp"

namespace cwb::cli {

using Json = nlohmann::ordered_json;

// Text form of a report: `key: value` lines, nested objects indented, scalar
// arrays space-separated, object arrays as `-` items, multi-line strings as
// indented blocks.
std::string render_text(const Json& report);

std::string render(const Json& report, const std::string& format);

}  // namespace cwb::cli
