#pragma once

#include <stdexcept>
#include <string>

namespace creoletag {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An attribute was used without a matching domain declaration (grammar bug).
class UndeclaredAttribute : public Error {
 public:
  explicit UndeclaredAttribute(const std::string& attr)
      : Error("undeclared attribute '" + attr + "'"), attribute(attr) {}
  std::string attribute;
};

class UnknownValue : public Error {
 public:
  UnknownValue(const std::string& attr, const std::string& value)
      : Error("value '" + value + "' not in domain of '" + attr + "'") {}
};

class UnificationFailure : public Error {
 public:
  using Error::Error;
};

class AnchorUnificationFailure : public UnificationFailure {
 public:
  using UnificationFailure::UnificationFailure;
};

class CollapseFailure : public UnificationFailure {
 public:
  CollapseFailure(const std::string& address, const std::string& detail)
      : UnificationFailure("top/bottom collapse failed at node " + address +
                           (detail.empty() ? "" : ": " + detail)),
        node_address(address) {}
  std::string node_address;
};

class NotASubstitutionSite : public Error {
 public:
  using Error::Error;
};

class LabelMismatch : public Error {
 public:
  using Error::Error;
};

class PendingSite : public Error {
 public:
  using Error::Error;
};

class InvalidAddress : public Error {
 public:
  using Error::Error;
};

}  // namespace creoletag
