#pragma once

#include <stdexcept>
#include <string>

namespace fthresh {

// Domain failure: bad input for an otherwise well-formed request.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// The requested rule/ideal combination has no algorithm here.
class UnsupportedError : public DomainError {
public:
    explicit UnsupportedError(const std::string& what) : DomainError(what) {}
};

// A computation would need capabilities the rule does not provide (e.g. generators).
class CapabilityError : public DomainError {
public:
    explicit CapabilityError(const std::string& what) : DomainError(what) {}
};

class ParseError : public DomainError {
public:
    ParseError(const std::string& what, std::size_t pos, std::string token)
        : DomainError(what + " at position " + std::to_string(pos) + " near '" + token + "'"),
          position(pos), token(std::move(token)) {}
    std::size_t position;
    std::string token;
};

}  // namespace fthresh
