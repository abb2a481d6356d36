#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "genbeta/log_complex.hpp"

namespace genbeta::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

/// "2", "-0.7", "1/3", "0.4+2i", "1e-3-2.5i", "-i". Throws invalid_argument.
cplx parse_complex(std::string_view s);

/// Angle in units of pi, with an optional "pi" suffix: "0.4", "0.4pi", "pi".
/// Returns radians. Throws invalid_argument.
double parse_angle(std::string_view s);

/// "(m_re + m_im i)x10^k" with 10 significant digits, or "m x10^k" when real.
std::string format_value(const LogComplex& v);

/// {text, log_mod, phase, re, im}; re and im are null when the value
/// overflows a double.
Json value_json(const LogComplex& v);

/// Renders a command document. Arrays of objects become tables; text output
/// shows "traces" instead of "rows" when both are present.
std::string render(const Json& doc, Format format);

/// Full command line entry point. Returns the process exit status: 0 on
/// success, 1 on a library error, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace genbeta::cli
