#pragma once

namespace jordanip {

/// Artifact version embedded in every CLI report.
inline constexpr const char* kVersion = "1.0.0";

/// Report schema version; bump on any incompatible report layout change.
inline constexpr int kSchema = 1;

}  // namespace jordanip
