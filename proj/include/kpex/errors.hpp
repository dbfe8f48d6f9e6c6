// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 kpex contributors

#pragma once

#include <stdexcept>
#include <string>

namespace kpex {

// Error categories map 1:1 onto CLI exit codes (io=2, validation=3,
// provider=4, internal=5).
enum class ErrorKind { Io, Validation, Provider, Internal };

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Io: return "io";
        case ErrorKind::Validation: return "validation";
        case ErrorKind::Provider: return "provider";
        case ErrorKind::Internal: return "internal";
    }
    return "internal";
}

inline int error_kind_exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::Io: return 2;
        case ErrorKind::Validation: return 3;
        case ErrorKind::Provider: return 4;
        case ErrorKind::Internal: return 5;
    }
    return 5;
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace kpex
