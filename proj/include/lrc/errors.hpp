#pragma once

#include <stdexcept>
#include <string>

namespace lrc {

// Every failure mode named by the library contracts. CLI maps any Error to
// exit code 1; falsified verification claims are reported, not thrown.
enum class Errc {
    NonPrimeCharacteristic,
    ReducibleModulus,
    DivisionByZero,
    FieldMismatch,
    DlogOfZero,
    EvenCharacteristic,
    OrderNotDividing,
    FieldTooLarge,
    ZeroPolynomial,
    DuplicateAbscissa,
    DegreeTooSmall,
    NoGoodSets,
    BadSplit,
    DependentBasis,
    NotSubspace,
    BadTowerDegree,
    PreconditionFailed,
    IndexOutOfRange,
    ShapeMismatch,
    DegreeMismatch,
    NotEnoughRoots,
    NotEnoughSets,
    MissingSplit,
    KTooSmall,
    KTooLarge,
    VOutOfRange,
    LengthMismatch,
    RankDeficient,
    BudgetExceeded,
    NoWitnessFound,
    TooManyErasures,
    InconsistentSurvivors,
    NotInCode,
    IoError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace lrc
