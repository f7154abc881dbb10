#pragma once

// DFA file formats.
//
// Text (canonical):   "n m\n" then one line per letter: "<name> <img_0> ... <img_{n-1}>\n"
// JSON mirror:        {"n": n, "letters": [{"name": "...", "images": [...]}, ...]}

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "synchrokit/core.hpp"

namespace synchrokit {

std::string to_text(const Dfa& d);
Dfa parse_text(const std::string& text);

nlohmann::json to_json(const Dfa& d);
Dfa from_json(const nlohmann::json& j);

/// Accepts either format; JSON is recognised by a leading '{'.
Dfa parse_dfa(const std::string& content);
Dfa read_dfa_file(const std::string& path);

}  // namespace synchrokit
