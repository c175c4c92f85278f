// Copyright 2026 The noethops authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOETHOPS_CERTIFICATE_IO_HPP
#define NOETHOPS_CERTIFICATE_IO_HPP

#include <string>

#include "noethops/decomp.hpp"

namespace noethops {

/// Certificate <-> JSON document, fixed schema:
///   { "ring": { "vars": [...], "field": "QQ" },
///     "ideal": ["...", ...],
///     "components": [
///        { "prime": [...], "free_vars": [...], "operators": [...], "nil": n },
///        ... ] }
/// `nil` is present exactly when it was computed (nonzero excess).
std::string certificate_to_json(const Certificate& cert, int indent = 2);
Certificate certificate_from_json(const std::string& text);

}  // namespace noethops

#endif
