#ifndef NMCAVITY_VERSION_HPP
#define NMCAVITY_VERSION_HPP

namespace nmcavity {

inline constexpr const char* kVersion = "0.1.0";

// Bumped whenever the CSV column layout or the metadata/summary JSON
// schema changes incompatibly.
inline constexpr int kOutputFormatVersion = 1;

}  // namespace nmcavity

#endif
