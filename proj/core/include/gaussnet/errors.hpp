#pragma once

#include <stdexcept>
#include <string>

namespace gaussnet {

/// A state or matrix violates a physical validity constraint (uncertainty
/// relation, symplecticity). Maps to CLI exit code 2.
class PhysicsError : public std::runtime_error {
  public:
    explicit PhysicsError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested computation exceeds a configured size limit.
class CapacityError : public std::runtime_error {
  public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or semantically invalid CLI configuration. Carries a stable
/// machine-readable code alongside the human message.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

}  // namespace gaussnet
