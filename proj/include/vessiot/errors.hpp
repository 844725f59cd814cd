#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vessiot {

/// Base of every error raised by the engine. Input problems (bad text, bad
/// files) and mathematical refusals (degenerate sections) share this root so
/// the CLI can map them onto exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

#define VESSIOT_DEFINE_ERROR(Name)          \
    class Name : public Error {             \
    public:                                 \
        using Error::Error;                 \
    };

VESSIOT_DEFINE_ERROR(UnknownIdentifier)
VESSIOT_DEFINE_ERROR(DivisionByZeroLiteral)
VESSIOT_DEFINE_ERROR(DivisionByZero)
VESSIOT_DEFINE_ERROR(IndexOutOfRange)
VESSIOT_DEFINE_ERROR(SingularPoint)
VESSIOT_DEFINE_ERROR(OrderOverflow)
VESSIOT_DEFINE_ERROR(PreconditionViolation)
VESSIOT_DEFINE_ERROR(DegenerateSection)
VESSIOT_DEFINE_ERROR(DegenerateMetric)
VESSIOT_DEFINE_ERROR(DegeneratePair)
VESSIOT_DEFINE_ERROR(KindMismatch)
VESSIOT_DEFINE_ERROR(NotIntegrable)
VESSIOT_DEFINE_ERROR(NotProportional)
VESSIOT_DEFINE_ERROR(NotAPerfectSquare)
VESSIOT_DEFINE_ERROR(ZeroScale)
VESSIOT_DEFINE_ERROR(DegreeOverflow)
VESSIOT_DEFINE_ERROR(InputError)

#undef VESSIOT_DEFINE_ERROR

}  // namespace vessiot
