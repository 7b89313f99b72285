#pragma once

#include <stdexcept>
#include <string>

namespace princ {

#define PRINC_DEFINE_ERROR(Name)                                            \
    struct Name : std::runtime_error {                                      \
        explicit Name(const std::string& what) : std::runtime_error(what) {} \
    }

PRINC_DEFINE_ERROR(CycleDetected);
PRINC_DEFINE_ERROR(NoBounds);
PRINC_DEFINE_ERROR(EmptyOrder);
PRINC_DEFINE_ERROR(TrivialOrder);
PRINC_DEFINE_ERROR(NotALattice);
PRINC_DEFINE_ERROR(NotACongruence);
PRINC_DEFINE_ERROR(SizeLimitExceeded);
PRINC_DEFINE_ERROR(MissingLabels);
PRINC_DEFINE_ERROR(BoundElement);
PRINC_DEFINE_ERROR(WellDefinednessViolation);
PRINC_DEFINE_ERROR(HypothesisViolated);
PRINC_DEFINE_ERROR(NotZeroSeparating);
PRINC_DEFINE_ERROR(ParseError);

#undef PRINC_DEFINE_ERROR

}  // namespace princ
