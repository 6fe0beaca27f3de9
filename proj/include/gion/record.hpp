#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gion {

enum class OutputFormat { Text, Json, Csv };

/// Parses "text", "json", or "csv"; throws std::invalid_argument otherwise.
OutputFormat parse_output_format(const std::string& name);

/// Floating-point values rendered with 12 significant digits, so repeated
/// runs serialize identically.
std::string format_double(double value);

/// Ordered key/value report emitted by the CLI commands. Keys keep
/// insertion order in every serialization, values are typed, and doubles go
/// through format_double, which makes the output deterministic.
class OutputRecord {
 public:
  using Value = std::variant<double, long long, bool, std::string>;
  using Entry = std::pair<std::string, Value>;

  explicit OutputRecord(std::string mode) : mode_(std::move(mode)) {}

  void input(std::string key, Value value);
  void output(std::string key, Value value);
  void diagnostic(std::string key, Value value);

  const std::string& mode() const { return mode_; }
  const std::vector<Entry>& inputs() const { return inputs_; }
  const std::vector<Entry>& outputs() const { return outputs_; }
  const std::vector<Entry>& diagnostics() const { return diagnostics_; }

  std::string to_text() const;
  std::string to_json() const;
  std::string to_csv() const;
  std::string serialize(OutputFormat format) const;

 private:
  std::string mode_;
  std::vector<Entry> inputs_;
  std::vector<Entry> outputs_;
  std::vector<Entry> diagnostics_;
};

}  // namespace gion
