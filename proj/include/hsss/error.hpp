#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hsss {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid scheme configuration (zero groups, empty secret list, t out of range).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Malformed or wrong-version serialized state.
class FormatError : public Error {
public:
    using Error::Error;
};

// A participant id that is not part of this deployment.
class ForeignParticipantError : public Error {
public:
    explicit ForeignParticipantError(const std::string& id)
        : Error("foreign participant id: " + id), participant(id) {}
    std::string participant;
};

// A submitted share whose hash is not in the published verification set g*.
class InvalidShareError : public Error {
public:
    explicit InvalidShareError(const std::string& id)
        : Error("invalid share from participant " + id + ": not in g*"), participant(id) {}
    std::string participant;
};

// Fewer distinct group shares than the recovery requires.
class InsufficientSharesError : public Error {
public:
    InsufficientSharesError(std::size_t have_, std::size_t need_)
        : Error("insufficient distinct shares: have " + std::to_string(have_) +
                ", need " + std::to_string(need_)),
          have(have_), need(need_) {}
    std::size_t have;
    std::size_t need;
};

// More distinct shares than the live group count; treated as a foreign-share
// anomaly rather than silently subset-selecting.
class ExcessSharesError : public Error {
public:
    ExcessSharesError(std::size_t have_, std::size_t need_)
        : Error("excess distinct shares: have " + std::to_string(have_) +
                ", need " + std::to_string(need_)),
          have(have_), need(need_) {}
    std::size_t have;
    std::size_t need;
};

// Secret or basis index out of range.
class UnknownIndexError : public Error {
public:
    explicit UnknownIndexError(const std::string& what) : Error(what) {}
};

// AEAD tag verification failed: wrong key or tampered vault entry.
class AuthenticationError : public Error {
public:
    using Error::Error;
};

class EpochMismatchError : public Error {
public:
    using Error::Error;
};

} // namespace hsss
