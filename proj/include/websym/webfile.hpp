#pragma once

#include <iosfwd>
#include <string>

#include "websym/web.hpp"

namespace websym {

/// Plain-text web definition: `key = value` lines, '#' comments, expression
/// lists in brackets. Keys: variables (x,y or u,v), optional degree and
/// label, exactly one of slopes / coefficients / foliations, and optional
/// allow_vertical = true for numeric-only foliation webs. Rational literals
/// round-trip bit-exactly.
Web parse_web_file(std::istream& in, const std::string& origin = "<stream>");
Web load_web_file(const std::string& path);
std::string render_web_file(const Web& w);

}  // namespace websym
