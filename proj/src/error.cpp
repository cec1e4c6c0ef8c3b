#include "qlc/error.hpp"

namespace qlc {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::ZeroTotal: return "ZeroTotal";
    case ErrorKind::InvalidScheme: return "InvalidScheme";
    case ErrorKind::BadMagic: return "BadMagic";
    case ErrorKind::BadVersion: return "BadVersion";
    case ErrorKind::TruncatedPayload: return "TruncatedPayload";
    case ErrorKind::InvalidCode: return "InvalidCode";
    case ErrorKind::InvalidMapping: return "InvalidMapping";
    case ErrorKind::TrailingGarbage: return "TrailingGarbage";
    case ErrorKind::MissingCode: return "MissingCode";
    case ErrorKind::CodeTooLong: return "CodeTooLong";
    case ErrorKind::Io: return "Io";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

} // namespace qlc
