// error.hpp -- exception type shared by every pword module

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace pword {

enum class ErrorCode {
    kInvalidCharacter,
    kLetterOutsideAlphabet,
    kOutOfRange,
    kIncompatible,
    kNotAPower,
    kAlphabetTooSmall,
    kBadExponent,
    kInvalidArgument,
    kResourceLimit,
};

/// Returns a stable identifier such as "InvalidCharacter".
const char *error_code_name(ErrorCode code) noexcept;

/// All recoverable failures raised by the library. `position()` is a
/// 1-based symbol position when the error refers to a place in a word.
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string &message,
          std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), _code(code), _position(position)
    {
    }

    ErrorCode code() const noexcept { return _code; }
    std::optional<std::size_t> position() const noexcept { return _position; }

private:
    ErrorCode _code;
    std::optional<std::size_t> _position;
};

} // namespace pword
