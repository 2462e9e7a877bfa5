// hash.hpp
// Copyright (c) 2026, the texglyph authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>

namespace texglyph {

/// Hex-encoded SHA-256. Used for content hashes and cache keys.
std::string sha256_hex(std::span<const unsigned char> data);
std::string sha256_hex(const std::string& data);

} // namespace texglyph
