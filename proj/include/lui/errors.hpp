#ifndef LUI_ERRORS_HPP
#define LUI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lui {

/// A requested computation exceeds a configured size limit.
class size_error : public std::runtime_error {
public:
  explicit size_error(const std::string& what) : std::runtime_error(what) {}
};

/// Input data failed validation (non-Hermitian matrix, malformed file, ...).
class validation_error : public std::runtime_error {
public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands have incompatible shapes or subsystem structure.
class dimension_mismatch : public std::runtime_error {
public:
  explicit dimension_mismatch(const std::string& what) : std::runtime_error(what) {}
};

/// A run exhausted its memory or time budget; carries partial progress info.
class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lui

#endif
