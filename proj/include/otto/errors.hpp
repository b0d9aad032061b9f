#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace otto {

/// A parameter lies outside its physical domain. `field()` names the offending input.
class DomainError : public std::invalid_argument {
 public:
  DomainError(std::string field, const std::string& what)
      : std::invalid_argument(what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A closed-form ratio hit a vanishing denominator.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A result violated a relation that must hold by construction.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
 public:
  IoError(std::string path, const std::string& what)
      : std::runtime_error(what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace otto
