#pragma once

#include <stdexcept>
#include <string>

namespace dsmn {

// Base class for all library errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data or on-disk artifact (exit code 2 at the CLI).
class data_error : public error {
 public:
  explicit data_error(const std::string& what) : error(what) {}
};

// Violated call contract: bad shapes, out-of-range arguments.
class contract_error : public error {
 public:
  explicit contract_error(const std::string& what) : error(what) {}
};

// A generator exhausted its attempt budget.
class generation_error : public error {
 public:
  explicit generation_error(const std::string& what) : error(what) {}
};

}  // namespace dsmn
