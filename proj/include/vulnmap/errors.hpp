#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vulnmap {

/// Process exit codes shared by the CLI and by error classification.
enum class ExitCode : int { ok = 0, internal = 1, input = 2, config = 3 };

/// Base for every error raised by the library.  `code()` tells the CLI which
/// exit status to use.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg, ExitCode code = ExitCode::internal)
        : std::runtime_error(msg), code_(code) {}
    ExitCode code() const noexcept { return code_; }

private:
    ExitCode code_;
};

/// Malformed input bytes.  `offset` is the byte position where parsing failed.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")", ExitCode::input), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class UnsupportedVersionError : public Error {
public:
    explicit UnsupportedVersionError(const std::string& msg) : Error(msg, ExitCode::input) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg, ExitCode::config) {}
};

/// Broken structural guarantees such as a cycle in the weakness hierarchy.
class IntegrityError : public Error {
public:
    explicit IntegrityError(const std::string& msg) : Error(msg, ExitCode::input) {}
};

class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(msg, ExitCode::input) {}
};

class NotFoundError : public Error {
public:
    explicit NotFoundError(const std::string& msg) : Error(msg, ExitCode::input) {}
};

class IncompatibleModelError : public Error {
public:
    explicit IncompatibleModelError(const std::string& msg) : Error(msg, ExitCode::input) {}
};

}  // namespace vulnmap
