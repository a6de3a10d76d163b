#pragma once

namespace subindex {

inline constexpr const char* kToolName = "subindex";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace subindex
