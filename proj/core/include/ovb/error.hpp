#pragma once

#include <stdexcept>
#include <string>

namespace ovb {

/// Failure category, mapped to process exit codes by the CLI
/// (usage -> 1, data -> 2, numeric -> 3).
enum class ErrorKind { usage, data, numeric };

/// Error carrying enough context to name the module, operation and
/// offending variable in a diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, std::string op,
        const std::string& detail, std::string variable = "")
      : std::runtime_error(format(module, op, detail, variable)),
        kind_(kind),
        module_(std::move(module)),
        op_(std::move(op)),
        variable_(std::move(variable)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& module_name() const noexcept { return module_; }
  const std::string& operation() const noexcept { return op_; }
  const std::string& variable() const noexcept { return variable_; }

 private:
  static std::string format(const std::string& module, const std::string& op,
                            const std::string& detail,
                            const std::string& variable) {
    std::string msg = "[" + module + "." + op + "] " + detail;
    if (!variable.empty()) msg += " (variable: " + variable + ")";
    return msg;
  }

  ErrorKind kind_;
  std::string module_;
  std::string op_;
  std::string variable_;
};

}  // namespace ovb
