#include "gion/record.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace gion {

OutputFormat parse_output_format(const std::string& name) {
  if (name == "text") {
    return OutputFormat::Text;
  }
  if (name == "json") {
    return OutputFormat::Json;
  }
  if (name == "csv") {
    return OutputFormat::Csv;
  }
  throw std::invalid_argument("unknown output format '" + name +
                              "' (expected text, json, or csv)");
}

std::string format_double(double value) {
  if (!std::isfinite(value)) {
    throw std::domain_error("format_double: value is not finite");
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

void OutputRecord::input(std::string key, Value value) {
  inputs_.emplace_back(std::move(key), std::move(value));
}

void OutputRecord::output(std::string key, Value value) {
  outputs_.emplace_back(std::move(key), std::move(value));
}

void OutputRecord::diagnostic(std::string key, Value value) {
  diagnostics_.emplace_back(std::move(key), std::move(value));
}

namespace {

std::string value_text(const OutputRecord::Value& value) {
  if (const auto* d = std::get_if<double>(&value)) {
    return format_double(*d);
  }
  if (const auto* i = std::get_if<long long>(&value)) {
    return std::to_string(*i);
  }
  if (const auto* b = std::get_if<bool>(&value)) {
    return *b ? "true" : "false";
  }
  return std::get<std::string>(value);
}

std::string json_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size() + 2);
  for (const char c : text) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string value_json(const OutputRecord::Value& value) {
  if (const auto* d = std::get_if<double>(&value)) {
    return format_double(*d);
  }
  if (const auto* i = std::get_if<long long>(&value)) {
    return std::to_string(*i);
  }
  if (const auto* b = std::get_if<bool>(&value)) {
    return *b ? "true" : "false";
  }
  return "\"" + json_escape(std::get<std::string>(value)) + "\"";
}

void json_section(std::ostringstream& out, const char* name,
                  const std::vector<OutputRecord::Entry>& entries) {
  out << "\"" << name << "\":{";
  bool first = true;
  for (const auto& [key, value] : entries) {
    if (!first) {
      out << ",";
    }
    first = false;
    out << "\"" << json_escape(key) << "\":" << value_json(value);
  }
  out << "}";
}

std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) {
    return text;
  }
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') {
      out += "\"\"";
    } else {
      out += c;
    }
  }
  out += "\"";
  return out;
}

}  // namespace

std::string OutputRecord::to_text() const {
  std::ostringstream out;
  out << "mode: " << mode_ << "\n";
  const auto section = [&out](const char* name,
                              const std::vector<Entry>& entries) {
    if (entries.empty()) {
      return;
    }
    out << name << ":\n";
    for (const auto& [key, value] : entries) {
      out << "  " << key << " = " << value_text(value) << "\n";
    }
  };
  section("inputs", inputs_);
  section("outputs", outputs_);
  section("diagnostics", diagnostics_);
  return out.str();
}

std::string OutputRecord::to_json() const {
  std::ostringstream out;
  out << "{\"mode\":\"" << json_escape(mode_) << "\",";
  json_section(out, "inputs", inputs_);
  out << ",";
  json_section(out, "outputs", outputs_);
  out << ",";
  json_section(out, "diagnostics", diagnostics_);
  out << "}";
  return out.str();
}

std::string OutputRecord::to_csv() const {
  std::ostringstream header;
  std::ostringstream row;
  header << "mode";
  row << csv_escape(mode_);
  for (const auto* section : {&inputs_, &outputs_, &diagnostics_}) {
    for (const auto& [key, value] : *section) {
      header << "," << csv_escape(key);
      row << "," << csv_escape(value_text(value));
    }
  }
  return header.str() + "\n" + row.str() + "\n";
}

std::string OutputRecord::serialize(OutputFormat format) const {
  switch (format) {
    case OutputFormat::Text:
      return to_text();
    case OutputFormat::Json:
      return to_json() + "\n";
    case OutputFormat::Csv:
      return to_csv();
  }
  return to_text();
}

}  // namespace gion
