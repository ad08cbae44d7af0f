#pragma once

#include <stdexcept>
#include <string>

namespace holoiso {

/// Base of every error raised by the library. Each subclass names one
/// failure mode so callers can catch exactly what they can handle.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define HOLOISO_DEFINE_ERROR(Name)                                      \
    class Name : public Error {                                         \
    public:                                                             \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

HOLOISO_DEFINE_ERROR(ZeroPolynomial);
HOLOISO_DEFINE_ERROR(SampleAtSingularity);
HOLOISO_DEFINE_ERROR(NotBlaschkeForm);
HOLOISO_DEFINE_ERROR(NotUnitary);
HOLOISO_DEFINE_ERROR(InvalidZeta);
HOLOISO_DEFINE_ERROR(DegenerateFrame);
HOLOISO_DEFINE_ERROR(ContinuationFailure);
HOLOISO_DEFINE_ERROR(OutsideDomain);
HOLOISO_DEFINE_ERROR(NothingToPeel);
HOLOISO_DEFINE_ERROR(HypothesisViolated);
HOLOISO_DEFINE_ERROR(ShapeMismatch);
HOLOISO_DEFINE_ERROR(NotMember);
HOLOISO_DEFINE_ERROR(PoleOnGrid);
HOLOISO_DEFINE_ERROR(NotAnIsometry);
HOLOISO_DEFINE_ERROR(ConclusionViolated);

#undef HOLOISO_DEFINE_ERROR

}  // namespace holoiso
