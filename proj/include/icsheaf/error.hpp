#pragma once

#include <stdexcept>
#include <string>

namespace icsheaf {

// Every module error carries a kind tag; what() renders "Kind(detail)".
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail = {})
      : std::runtime_error(detail.empty() ? kind : kind + "(" + detail + ")"),
        kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

}  // namespace icsheaf
