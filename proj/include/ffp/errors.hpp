#ifndef FFP_ERRORS_HPP
#define FFP_ERRORS_HPP

#include <stdexcept>

namespace ffp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define FFP_DEFINE_ERROR(Name)                  \
    struct Name : Error {                       \
        using Error::Error;                     \
    }

FFP_DEFINE_ERROR(NonPrime);
FFP_DEFINE_ERROR(DegreeZero);
FFP_DEFINE_ERROR(Overflow);
FFP_DEFINE_ERROR(NotAUnit);
FFP_DEFINE_ERROR(EvenCharacteristic);
FFP_DEFINE_ERROR(NotOneMod4);
FFP_DEFINE_ERROR(EvenPrimePower);
FFP_DEFINE_ERROR(DivisibilityViolation);
FFP_DEFINE_ERROR(NotMonic);
FFP_DEFINE_ERROR(NotAField);
FFP_DEFINE_ERROR(SearchSpaceTooLarge);
FFP_DEFINE_ERROR(SearchExhausted);
FFP_DEFINE_ERROR(PreconditionViolated);
FFP_DEFINE_ERROR(FieldTooSmall);
FFP_DEFINE_ERROR(NoSuchN);
FFP_DEFINE_ERROR(NonCommutingParts);
FFP_DEFINE_ERROR(HypothesisViolated);
FFP_DEFINE_ERROR(WrongCharacteristic);

#undef FFP_DEFINE_ERROR

}  // namespace ffp

#endif
