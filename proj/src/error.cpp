#include "richelot/error.hpp"

namespace richelot {

const char *errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::BothZero: return "BothZero";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::WrongDegree: return "WrongDegree";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::Singular: return "Singular";
    case Errc::Zero: return "Zero";
    case Errc::DegenerateSystem: return "DegenerateSystem";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InconsistentCounts: return "InconsistentCounts";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::BrokenFunctionalEquation: return "BrokenFunctionalEquation";
    case Errc::NotInvolution: return "NotInvolution";
    case Errc::NormalizationFailed: return "NormalizationFailed";
    case Errc::HyperellipticContradiction: return "HyperellipticContradiction";
    case Errc::DegenerateDiscriminant: return "DegenerateDiscriminant";
    case Errc::WrongGenus: return "WrongGenus";
    case Errc::CertificateFailed: return "CertificateFailed";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::Overflow: return "Overflow";
    case Errc::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

} // namespace richelot
