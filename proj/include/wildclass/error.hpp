#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wildclass {

// Validation and parse failures carry a stable machine-readable code
// (e.g. "not_antisymmetric", "self_loop", "scale_guard") plus the witness
// indices exhibiting the violation.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& message, std::vector<int> witness = {})
        : std::runtime_error(code + ": " + message),
          code_(std::move(code)),
          witness_(std::move(witness)) {}

    const std::string& code() const { return code_; }
    const std::vector<int>& witness() const { return witness_; }

private:
    std::string code_;
    std::vector<int> witness_;
};

}  // namespace wildclass
