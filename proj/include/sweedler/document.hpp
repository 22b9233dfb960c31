#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sweedler/errors.hpp"
#include "sweedler/measuring.hpp"
#include "sweedler/reconstruct.hpp"
#include "sweedler/structures.hpp"
#include "sweedler/tambara.hpp"

namespace sweedler {

/// Malformed document text; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A well-formed document whose structure fails its axioms.
class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report)
      : Error("validation failed: " + report.summary()), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// A document file that cannot be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

using DocumentValue = std::variant<AlgebraData, CoalgebraData, BialgebraData, HopfData, Measuring,
                                   PresentedAlgebra, GeneratedSubcoalgebra>;

struct Document {
  DocumentValue value;
  /// Degrees of the basis (structure documents only).
  std::optional<std::vector<long>> degrees;

  friend bool operator==(const Document&, const Document&) = default;
};

struct ParseOptions {
  /// Check axioms after parsing; failures throw ValidationError.
  bool validate = true;
  /// Directory against which `source` and `target` paths are resolved.
  std::filesystem::path base_dir;
};

/// The grammar is described in docs/format.md.
Document parse_document(std::string_view text, const ParseOptions& options = {});
/// Canonical text; parse_document(serialize(d)) == d.
std::string serialize(const Document& doc);

Document load_document(const std::filesystem::path& path, bool validate = true);

/// "algebra", "coalgebra", "bialgebra", "hopf", "measuring", "presentation"
/// or "subcoalgebra".
std::string kind_name(const Document& doc);

/// The axioms of whatever the document holds, graded when degrees are present.
ValidationReport validate_document(const Document& doc);

}  // namespace sweedler
