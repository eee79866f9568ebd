//
// Copyright 2026 ffkit developers
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FFKIT_COMMON_ERROR_HPP
#define FFKIT_COMMON_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ffkit {

/// Error categories, mapped to CLI exit codes (input -> 2, numeric -> 3).
enum class ErrorKind { Input, Numeric };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline Error input_error(const std::string& msg) { return Error(ErrorKind::Input, msg); }
inline Error numeric_error(const std::string& msg) { return Error(ErrorKind::Numeric, msg); }

}  // namespace ffkit

#endif  // FFKIT_COMMON_ERROR_HPP
