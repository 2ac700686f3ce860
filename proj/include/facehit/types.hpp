#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace facehit {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using DartId = std::int32_t;
using FaceId = std::int32_t;

inline constexpr std::int32_t kNone = -1;

// Darts 2e and 2e+1 are the two sides of edge e.
constexpr DartId twin(DartId d) noexcept { return d ^ 1; }
constexpr EdgeId edge_of(DartId d) noexcept { return d >> 1; }
constexpr DartId first_dart(EdgeId e) noexcept { return 2 * e; }

enum class ErrorKind {
    MalformedRotation,
    Parse,
    InvalidArgument,
    NotBiconnected,
    BigonPresent,
    EdgeNotOnFace,
    NotTriangulated,
    HasLoop,
    Disconnected,
    TooSmall,
    StrictModeViolation,
    OddCycleUnfixable,
    NotCubic,
    NotBridgeless,
    InvariantViolation,
};

const char* to_string(ErrorKind kind) noexcept;

/// Precondition errors carry their kind; InvariantViolation signals a bug.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace facehit
