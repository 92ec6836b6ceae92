#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mbr {

enum class Errc {
    CycleDetected,
    Disconnected,
    BadInterval,
    DuplicateEdge,
    UnknownVertex,
    SameVertex,
    NotNeighbor,
    BadScenario,
    ZeroRho,
    IndexOutOfRange,
    StaleTables,
    OutOfUniverse,
    TooLarge,
    BadRange,
    Parse,
    InvariantViolation,
};

constexpr std::string_view to_string(Errc c) noexcept {
    switch (c) {
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::Disconnected: return "Disconnected";
    case Errc::BadInterval: return "BadInterval";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::SameVertex: return "SameVertex";
    case Errc::NotNeighbor: return "NotNeighbor";
    case Errc::BadScenario: return "BadScenario";
    case Errc::ZeroRho: return "ZeroRho";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::StaleTables: return "StaleTables";
    case Errc::OutOfUniverse: return "OutOfUniverse";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BadRange: return "BadRange";
    case Errc::Parse: return "Parse";
    case Errc::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace mbr
