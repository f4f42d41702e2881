#pragma once

#include <stdexcept>
#include <string>

namespace ffpotent {

enum class ErrorKind {
	NotPrimePower,
	CapacityExceeded,
	LogOfZero,
	InvalidExponent,
	FieldMismatch,
	PreconditionViolated,
	BadOrder,
	Overflow,
	DuplicateRoots,
	CheckpointMismatch,
	InvalidArgument,
};

const char *to_string(ErrorKind kind) noexcept;

// Every recoverable failure in the library is reported through this type;
// callers switch on kind() rather than on the message text.
class Error : public std::runtime_error
{
  public:
	Error(ErrorKind kind, const std::string &what)
	    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
	{}

	ErrorKind kind() const noexcept { return kind_; }

  private:
	ErrorKind kind_;
};

} // namespace ffpotent
