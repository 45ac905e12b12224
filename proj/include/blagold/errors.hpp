#pragma once

#include <stdexcept>
#include <string>

namespace blagold {

// Base for all domain errors. `code()` is the stable machine-readable
// identifier surfaced by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define BLAGOLD_ERROR(Name)                                    \
    class Name : public Error {                                \
    public:                                                    \
        explicit Name(const std::string& what = #Name)         \
            : Error(#Name, what) {}                            \
    }

BLAGOLD_ERROR(NonConvergence);
BLAGOLD_ERROR(DegreeZero);
BLAGOLD_ERROR(BracketInvalid);
BLAGOLD_ERROR(BadDegreeBound);
BLAGOLD_ERROR(PoleProximity);
BLAGOLD_ERROR(NotUnimodular);
BLAGOLD_ERROR(CoincidentPreimages);
BLAGOLD_ERROR(SizeMismatch);
BLAGOLD_ERROR(NotInterspersed);
BLAGOLD_ERROR(ZeroCenter);
BLAGOLD_ERROR(NotOnSegment);
BLAGOLD_ERROR(ZeroOrCoincidentFoci);
BLAGOLD_ERROR(DegenerateEllipse);
BLAGOLD_ERROR(DegenerateChord);
BLAGOLD_ERROR(DegenerateTriangle);
BLAGOLD_ERROR(DegenerateRadicand);
BLAGOLD_ERROR(FociOutsideDisc);
BLAGOLD_ERROR(FactorZeroOutsideDisc);
BLAGOLD_ERROR(ViewportOverflow);
BLAGOLD_ERROR(InvalidArgument);

#undef BLAGOLD_ERROR

}  // namespace blagold
