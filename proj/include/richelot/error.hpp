#pragma once

#include <stdexcept>
#include <string>

namespace richelot {

enum class Errc {
    NotPrime,
    EvenCharacteristic,
    TooLarge,
    ZeroPolynomial,
    SingularMatrix,
    BothZero,
    NotInvariant,
    WrongDegree,
    NotSquarefree,
    Singular,
    Zero,
    DegenerateSystem,
    BudgetExceeded,
    InconsistentCounts,
    NotDivisible,
    BrokenFunctionalEquation,
    NotInvolution,
    NormalizationFailed,
    HyperellipticContradiction,
    DegenerateDiscriminant,
    WrongGenus,
    CertificateFailed,
    FieldMismatch,
    Overflow,
    InvalidInput,
};

const char *errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string &what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

} // namespace richelot
