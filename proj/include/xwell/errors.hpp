#ifndef XWELL_ERRORS_HPP
#define XWELL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xwell {

// Base class for every numerical or domain failure raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define XWELL_DEFINE_ERROR(NAME)                                        \
    class NAME : public Error {                                         \
    public:                                                             \
        explicit NAME(const std::string& msg) : Error(#NAME ": " + msg) {} \
    }

XWELL_DEFINE_ERROR(PoleAtNonPositiveInteger);
XWELL_DEFINE_ERROR(ArgumentTooLargeForSeries);
XWELL_DEFINE_ERROR(NonConvergence);
XWELL_DEFINE_ERROR(NearIntegerOrderLimitFailed);
XWELL_DEFINE_ERROR(QuadratureNonConvergence);
XWELL_DEFINE_ERROR(EnergyBelowWellBottom);
XWELL_DEFINE_ERROR(NoClassicalTurningPoints);
XWELL_DEFINE_ERROR(NegativeEnergyForWellAction);
XWELL_DEFINE_ERROR(EnergyNotBelowBarrierTop);
XWELL_DEFINE_ERROR(BracketingFailed);
XWELL_DEFINE_ERROR(TooFewStatesInRange);
XWELL_DEFINE_ERROR(ArgumentOutOfSpecfunDomain);
XWELL_DEFINE_ERROR(PoleEncountered);
XWELL_DEFINE_ERROR(NoSignChange);
XWELL_DEFINE_ERROR(SingularSystem);
XWELL_DEFINE_ERROR(StepTooLarge);
XWELL_DEFINE_ERROR(OverflowBeforeXmax);
XWELL_DEFINE_ERROR(IoError);

#undef XWELL_DEFINE_ERROR

} // namespace xwell

#endif
