#pragma once

#include <stdexcept>
#include <string>

namespace twistlab {

/// Base of every structural error raised by the library. Failed identity
/// checks are never reported through exceptions; they are CheckResults.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define TWISTLAB_ERROR(Name)                  \
    class Name : public Error {               \
    public:                                   \
        explicit Name(const std::string& what) \
            : Error(#Name ": " + what) {}     \
    }

TWISTLAB_ERROR(NotNilpotent);
TWISTLAB_ERROR(LegOutOfRange);
TWISTLAB_ERROR(IndexOutOfRange);
TWISTLAB_ERROR(DimensionMismatch);
TWISTLAB_ERROR(NotApplicable);
TWISTLAB_ERROR(ExpansionOverflow);
TWISTLAB_ERROR(ConfigInvalid);
TWISTLAB_ERROR(UnknownState);
TWISTLAB_ERROR(FormatError);

#undef TWISTLAB_ERROR

}  // namespace twistlab
