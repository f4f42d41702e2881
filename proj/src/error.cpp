#include "ffpotent/error.hpp"

namespace ffpotent {

const char *to_string(ErrorKind kind) noexcept
{
	switch (kind)
	{
	case ErrorKind::NotPrimePower: return "NotPrimePower";
	case ErrorKind::CapacityExceeded: return "CapacityExceeded";
	case ErrorKind::LogOfZero: return "LogOfZero";
	case ErrorKind::InvalidExponent: return "InvalidExponent";
	case ErrorKind::FieldMismatch: return "FieldMismatch";
	case ErrorKind::PreconditionViolated: return "PreconditionViolated";
	case ErrorKind::BadOrder: return "BadOrder";
	case ErrorKind::Overflow: return "Overflow";
	case ErrorKind::DuplicateRoots: return "DuplicateRoots";
	case ErrorKind::CheckpointMismatch: return "CheckpointMismatch";
	case ErrorKind::InvalidArgument: return "InvalidArgument";
	}
	return "Unknown";
}

} // namespace ffpotent
