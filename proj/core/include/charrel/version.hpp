#pragma once

namespace charrel {

// Reported in every structured record so that resumed runs can detect
// engine changes.
inline constexpr const char* kEngineVersion = "1.0.0";

}  // namespace charrel
