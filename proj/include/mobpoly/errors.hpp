#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mobpoly {

// Base for all domain errors. `kind` is a stable machine-readable name that
// the CLI prints verbatim; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg.empty() ? kind : kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define MOBPOLY_ERROR(Name)                                        \
    class Name final : public Error {                              \
    public:                                                        \
        explicit Name(const std::string& msg = "")                 \
            : Error(#Name, msg) {}                                 \
    }

MOBPOLY_ERROR(NonMonotone);
MOBPOLY_ERROR(ConstantOne);
MOBPOLY_ERROR(TooLarge);
MOBPOLY_ERROR(DimensionMismatch);
MOBPOLY_ERROR(NotAntichain);
MOBPOLY_ERROR(TooManyAtoms);
MOBPOLY_ERROR(NotAtomistic);
MOBPOLY_ERROR(Cyclic);
MOBPOLY_ERROR(NoPath);
MOBPOLY_ERROR(TooManyPaths);
MOBPOLY_ERROR(NotUnionOfPaths);
MOBPOLY_ERROR(WidthOutOfRange);
MOBPOLY_ERROR(NotPrimitive);
MOBPOLY_ERROR(NoConvergence);
MOBPOLY_ERROR(Mismatch);
MOBPOLY_ERROR(ParseError);

#undef MOBPOLY_ERROR

} // namespace mobpoly
