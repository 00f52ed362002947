#ifndef QSAW_ERRORS_HPP
#define QSAW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsaw {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define QSAW_ERROR_KIND(NAME)                                                  \
    class NAME : public Error {                                               \
    public:                                                                    \
        using Error::Error;                                                    \
    }

QSAW_ERROR_KIND(DegenerateParameter);
QSAW_ERROR_KIND(InvalidOrder);
QSAW_ERROR_KIND(InvalidRank);
QSAW_ERROR_KIND(DimensionTooSmall);
QSAW_ERROR_KIND(OrderMismatch);
QSAW_ERROR_KIND(SpeciesMismatch);
QSAW_ERROR_KIND(IndexOutOfRange);
QSAW_ERROR_KIND(SpaceMismatch);
QSAW_ERROR_KIND(UndefinedGrading);
QSAW_ERROR_KIND(NotDiagonal);
QSAW_ERROR_KIND(MarginTooLarge);
QSAW_ERROR_KIND(UnknownSuite);
QSAW_ERROR_KIND(UnboundSymbol);
QSAW_ERROR_KIND(UnknownFunction);
QSAW_ERROR_KIND(ExtrapolationDiverged);
QSAW_ERROR_KIND(NonIntegerSpectrum);
QSAW_ERROR_KIND(TruncationNotMultiple);

#undef QSAW_ERROR_KIND

// gbr() on an operand whose grading could not be determined
using GradingMissing = UndefinedGrading;

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, int line, int column, std::string expected)
        : Error(what), line(line), column(column), expected(std::move(expected)) {}

    int line;
    int column;
    std::string expected;
};

} // namespace qsaw

#endif
