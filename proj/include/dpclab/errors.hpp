#pragma once

#include <stdexcept>
#include <string>

namespace dpclab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define DPCLAB_ERROR(Name)                                        \
    struct Name : Error {                                         \
        explicit Name(const std::string& msg) : Error(msg) {}     \
    }

DPCLAB_ERROR(SyntaxError);
DPCLAB_ERROR(IllFormedRule);
DPCLAB_ERROR(ArityClash);
DPCLAB_ERROR(PositionOutOfRange);
DPCLAB_ERROR(NonTerminating);
DPCLAB_ERROR(NonTerminatingRelative);
DPCLAB_ERROR(BudgetExceeded);
DPCLAB_ERROR(MissingFilterEntry);
DPCLAB_ERROR(NotOnMainBranch);
DPCLAB_ERROR(ChainNotProgenyLinked);
DPCLAB_ERROR(UndefinedRoot);
DPCLAB_ERROR(MissingInterpretation);
DPCLAB_ERROR(NonAffine);
DPCLAB_ERROR(IncompatibleAlgebra);
DPCLAB_ERROR(ArgumentTooLarge);
DPCLAB_ERROR(NotAnSrs);
DPCLAB_ERROR(SimulationFailed);
DPCLAB_ERROR(BadParams);
DPCLAB_ERROR(UsageError);

#undef DPCLAB_ERROR

}  // namespace dpclab
