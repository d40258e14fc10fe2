#pragma once

#include <stdexcept>
#include <string>

namespace mploc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define MPLOC_DEFINE_ERROR(Name)                       \
    struct Name : Error {                              \
        using Error::Error;                            \
    }

MPLOC_DEFINE_ERROR(BudgetExceeded);        // requested volume exceeds the matrix-dimension cap
MPLOC_DEFINE_ERROR(NoDecomposition);       // canonical decomposition asked of an FI cube
MPLOC_DEFINE_ERROR(ScaleTooSmall);         // cluster scale l too small for the cover radius
MPLOC_DEFINE_ERROR(WindowTooSmall);        // potential field does not cover the cube
MPLOC_DEFINE_ERROR(SingularEnergy);        // E within singular_tol of the spectrum
MPLOC_DEFINE_ERROR(ConvergenceFailure);    // eigensolver failed (fatal at this scale)
MPLOC_DEFINE_ERROR(NotWeaklySeparable);
MPLOC_DEFINE_ERROR(NotSeparable);
MPLOC_DEFINE_ERROR(InsufficientShells);
MPLOC_DEFINE_ERROR(ZeroVector);
MPLOC_DEFINE_ERROR(ZeroAtOrigin);
MPLOC_DEFINE_ERROR(DivergentTail);
MPLOC_DEFINE_ERROR(UnsupportedDistribution);
MPLOC_DEFINE_ERROR(CubeNotInterior);
MPLOC_DEFINE_ERROR(PreconditionViolation);
MPLOC_DEFINE_ERROR(ConfigError);

#undef MPLOC_DEFINE_ERROR

} // namespace mploc
