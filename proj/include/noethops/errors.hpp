// Copyright 2026 The noethops authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOETHOPS_ERRORS_HPP
#define NOETHOPS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace noethops {

// Violated operation precondition (non-maximal ideal, zero divisor, ...).
// The CLI maps this to exit code 4.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Mixing values from different ring contexts.
struct RingMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Text input rejected by the tokenizer/parser. Mapped to exit code 2.
struct ParseError : std::runtime_error {
    int line;
    int column;
    std::string expected;

    ParseError(const std::string& msg, int line_, int col_, std::string expected_ = "")
        : std::runtime_error(msg), line(line_), column(col_), expected(std::move(expected_)) {}
};

}  // namespace noethops

#endif
