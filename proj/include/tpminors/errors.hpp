#pragma once

#include <stdexcept>
#include <string>

namespace tpm {

// Precondition and verification failures. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
   public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionError : public Error {
   public:
    explicit DimensionError(const std::string& msg) : Error("dimension error: " + msg) {}
};

class DomainError : public Error {
   public:
    explicit DomainError(const std::string& msg) : Error("domain error: " + msg) {}
};

class PreconditionError : public Error {
   public:
    explicit PreconditionError(const std::string& msg) : Error("precondition error: " + msg) {}
};

// Malformed input text or JSON. The CLI maps this to exit code 2.
class FormatError : public std::runtime_error {
   public:
    explicit FormatError(const std::string& msg) : std::runtime_error("format error: " + msg) {}
};

}  // namespace tpm
