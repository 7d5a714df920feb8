#pragma once

#include <stdexcept>
#include <string>

namespace modcurve {

// Failure categories map one-to-one onto CLI exit codes.
enum class ErrorKind {
  Data = 2,         // malformed input, invalid fixture, unsupported request
  Certificate = 3,  // an arithmetic invariant or certificate failed to hold
  Network = 4,      // remote fetch failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(ErrorKind::Data, what) {}
};

class CertificateError : public Error {
 public:
  explicit CertificateError(const std::string& what) : Error(ErrorKind::Certificate, what) {}
};

class NetworkError : public Error {
 public:
  enum class Reason { Unreachable, NoCacheOffline, SchemaDrift };

  NetworkError(Reason reason, const std::string& what) : Error(ErrorKind::Network, what), reason_(reason) {}
  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

}  // namespace modcurve
