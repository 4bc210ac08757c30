#pragma once

#include <stdexcept>
#include <string>

namespace momentcut {

/// Base class for every named domain error raised by the library.
/// `name()` is the identifier printed verbatim by the command-line tool.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define MOMENTCUT_DEFINE_ERROR(Type)                                                   \
    class Type : public Error {                                                        \
    public:                                                                            \
        explicit Type(const std::string& what) : Error(#Type, what) {}                 \
    }

MOMENTCUT_DEFINE_ERROR(InputShapeError);
MOMENTCUT_DEFINE_ERROR(ZeroVectorError);
MOMENTCUT_DEFINE_ERROR(PointNotInSetError);
MOMENTCUT_DEFINE_ERROR(InsufficientWitnessError);
MOMENTCUT_DEFINE_ERROR(UnboundedInputError);
MOMENTCUT_DEFINE_ERROR(NoRoomError);
MOMENTCUT_DEFINE_ERROR(PreconditionError);
MOMENTCUT_DEFINE_ERROR(UnsupportedTypeError);
MOMENTCUT_DEFINE_ERROR(NotInChamberError);
MOMENTCUT_DEFINE_ERROR(PointNotVertexError);
MOMENTCUT_DEFINE_ERROR(NotAConeError);
MOMENTCUT_DEFINE_ERROR(DomainError);
MOMENTCUT_DEFINE_ERROR(NotDominantError);
MOMENTCUT_DEFINE_ERROR(RankError);
MOMENTCUT_DEFINE_ERROR(ParseError);

#undef MOMENTCUT_DEFINE_ERROR

// NonGenericCutError and CertificationFailure carry payloads and live next to
// the types they describe (toric_cuts.hpp, pipeline.hpp).

} // namespace momentcut
