// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace quditlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace quditlab
