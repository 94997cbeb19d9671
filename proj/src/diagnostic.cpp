#include "toulmin/diagnostic.hpp"

#include <algorithm>
#include <sstream>

namespace toulmin {

std::string_view to_string(Severity severity) {
  return severity == Severity::error ? "error" : "warning";
}

Diagnostic make_error(std::string_view code, std::string message, SourceSpan span,
                      std::string subject) {
  return Diagnostic{Severity::error, std::string(code), std::move(message), span,
                    std::move(subject)};
}

bool has_errors(std::span<const Diagnostic> diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::error; });
}

std::string format_diagnostic(const Diagnostic& diagnostic, std::string_view file) {
  std::ostringstream out;
  out << file << ':' << diagnostic.span.line << ':' << diagnostic.span.column << ": "
      << to_string(diagnostic.severity) << '[' << diagnostic.code
      << "]: " << diagnostic.message;
  return out.str();
}

namespace {

std::string summarize(const std::vector<Diagnostic>& diagnostics) {
  if (diagnostics.empty()) return "invalid value";
  std::string text = diagnostics.front().code + ": " + diagnostics.front().message;
  if (diagnostics.size() > 1) {
    text += " (and " + std::to_string(diagnostics.size() - 1) + " more)";
  }
  return text;
}

}  // namespace

Error::Error(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {
  if (diagnostics_.empty()) diagnostics_.push_back(make_error("invalid", "invalid value"));
}

Error::Error(std::string_view code, std::string message)
    : Error(std::vector<Diagnostic>{make_error(code, std::move(message))}) {}

}  // namespace toulmin
