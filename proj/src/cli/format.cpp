#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "genbeta/cli.hpp"
#include "genbeta/errors.hpp"

namespace genbeta::cli {

namespace {

std::string trim(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\t') out.push_back(c);
  }
  return out;
}

double parse_number(std::string_view s, std::string_view whole) {
  if (s.empty()) throw Error(ErrorKind::invalid_argument, "cannot parse number '" + std::string(whole) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::invalid_argument, "cannot parse number '" + std::string(whole) + "'");
  }
  return v;
}

// A number or a ratio of two numbers ("1/3").
double parse_real(std::string_view s, std::string_view whole) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return parse_number(s, whole);
  return parse_number(s.substr(0, slash), whole) / parse_number(s.substr(slash + 1), whole);
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string scalar_text(const Json& v, bool full) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return fmt(full ? "%.17g" : "%.10g", v.get<double>());
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

bool is_table(const Json& v) { return v.is_array() && !v.empty() && v.front().is_object(); }

// Nested objects flatten to dotted keys; tables are skipped.
void flatten(const Json& obj, const std::string& prefix, std::vector<std::pair<std::string, Json>>& out) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it.value().is_object()) {
      flatten(it.value(), key, out);
    } else if (!is_table(it.value())) {
      out.emplace_back(key, it.value());
    }
  }
}

std::vector<std::string> row_keys(const Json& table) {
  std::vector<std::pair<std::string, Json>> cols;
  flatten(table.front(), "", cols);
  std::vector<std::string> keys;
  for (auto& c : cols) keys.push_back(c.first);
  return keys;
}

std::vector<std::string> row_cells(const Json& row, bool full) {
  std::vector<std::pair<std::string, Json>> cols;
  flatten(row, "", cols);
  std::vector<std::string> cells;
  for (auto& c : cols) cells.push_back(scalar_text(c.second, full));
  return cells;
}

void text_table(std::ostream& os, const std::string& name, const Json& table) {
  const auto keys = row_keys(table);
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : table) rows.push_back(row_cells(r, false));
  std::vector<std::size_t> width(keys.size());
  for (std::size_t c = 0; c < keys.size(); ++c) {
    width[c] = keys[c].size();
    for (const auto& r : rows) {
      if (c < r.size()) width[c] = std::max(width[c], r[c].size());
    }
  }
  os << '\n' << name << ":\n";
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < keys.size(); ++c) {
      const std::string cell = c < cells.size() ? cells[c] : "";
      os << "  " << cell << std::string(width[c] - cell.size(), ' ');
    }
    os << '\n';
  };
  line(keys);
  for (const auto& r : rows) line(r);
}

}  // namespace

cplx parse_complex(std::string_view input) {
  const std::string s = trim(input);
  if (s.empty()) throw Error(ErrorKind::invalid_argument, "empty complex number");
  const char last = s.back();
  if (last != 'i' && last != 'j') return {parse_real(s, input), 0.0};

  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re_part = split == std::string::npos ? "" : body.substr(0, split);
  std::string im_part = split == std::string::npos ? body : body.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  const double re = re_part.empty() ? 0.0 : parse_real(re_part, input);
  return {re, parse_real(im_part, input)};
}

double parse_angle(std::string_view input) {
  std::string s = trim(input);
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) s.resize(s.size() - 2);
  if (s.empty() || s == "+") return pi;
  if (s == "-") return -pi;
  if (s.back() == '*') s.pop_back();
  return parse_real(s, input) * pi;
}

std::string format_value(const LogComplex& v) {
  if (v.is_zero()) return "0";
  const long double l10 = v.log_mod_extended() / std::log(10.0L);
  long double k = std::floor(l10);
  double m = static_cast<double>(std::pow(10.0L, l10 - k));
  if (m >= 9.9999999995) {  // rounding would print 10.000000000
    m /= 10.0;
    k += 1.0L;
  }
  const double re = m * std::cos(v.phase()), im = m * std::sin(v.phase());
  const std::string exponent = "×10^" + std::to_string(static_cast<long long>(k));
  const double tiny = 5e-11 * m;
  if (std::abs(im) <= tiny) return fmt("%.10g", re) + exponent;
  if (std::abs(re) <= tiny) return fmt("%.10g", im) + "i" + exponent;
  return "(" + fmt("%.10g", re) + (im < 0.0 ? " - " : " + ") + fmt("%.10g", std::abs(im)) + "i)" + exponent;
}

Json value_json(const LogComplex& v) {
  Json j;
  j["text"] = format_value(v);
  if (v.is_zero()) {
    j["log_mod"] = nullptr;
    j["phase"] = 0.0;
    j["re"] = 0.0;
    j["im"] = 0.0;
    return j;
  }
  j["log_mod"] = v.log_mod();
  j["phase"] = v.phase();
  if (std::abs(v.log_mod()) < 700.0) {
    const cplx z = v.to_complex();
    j["re"] = z.real();
    j["im"] = z.imag();
  } else {
    j["re"] = nullptr;
    j["im"] = nullptr;
  }
  return j;
}

std::string render(const Json& doc, Format format) {
  std::ostringstream os;
  if (format == Format::json) {
    os << doc.dump(2) << '\n';
    return os.str();
  }

  if (format == Format::csv) {
    const Json* table = nullptr;
    if (doc.contains("rows") && is_table(doc["rows"])) table = &doc["rows"];
    if (table) {
      const auto keys = row_keys(*table);
      for (std::size_t c = 0; c < keys.size(); ++c) os << (c ? "," : "") << csv_field(keys[c]);
      os << '\n';
      for (const auto& r : *table) {
        const auto cells = row_cells(r, true);
        for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << csv_field(cells[c]);
        os << '\n';
      }
    } else {
      std::vector<std::pair<std::string, Json>> cols;
      flatten(doc, "", cols);
      for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << csv_field(cols[c].first);
      os << '\n';
      for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << csv_field(scalar_text(cols[c].second, true));
      os << '\n';
    }
    return os.str();
  }

  std::vector<std::pair<std::string, Json>> scalars;
  flatten(doc, "", scalars);
  for (const auto& [k, v] : scalars) os << k << ": " << scalar_text(v, false) << '\n';
  const bool has_traces = doc.contains("traces");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!is_table(it.value())) continue;
    if (it.key() == "rows" && has_traces) continue;
    text_table(os, it.key(), it.value());
  }
  return os.str();
}

}  // namespace genbeta::cli
