#pragma once

#include "richelot/counting.hpp"
#include "richelot/involutions.hpp"
#include "richelot/quotients.hpp"

#include <optional>
#include <string>
#include <vector>

namespace richelot {

/// L_C = L_E * L_G2 from a long hyperelliptic involution.
struct HypSplit {
    InvolutionRecord sigma;
    NormalizedHyperelliptic normal;
    Genus1Model e;
    Genus2Model c_tau;
    LPolynomial l_c; // over the field of `normal` (base-changed when extended)
    LPolynomial l_e;
    LPolynomial l_g2;
};

/// L_E divides L_C for a quartic involution; the quotient is shared by three surfaces.
struct QuarticSplit {
    InvolutionRecord sigma;
    NormalizedQuartic normal;
    Genus1Model e;
    LPolynomial l_c;
    LPolynomial l_e;
    LPolynomial l_a;
    int multiplicity = 3;
};

/// L_C = L_E1 L_E2 L_E3 from a commuting pair of long involutions and their product.
struct CompleteSplit {
    InvolutionRecord sigma;
    InvolutionRecord tau;
    InvolutionRecord product;
    std::array<Genus1Model, 3> e;
    std::array<LPolynomial, 3> l_e;
    LPolynomial l_c;
};

struct DecompositionReport {
    CurveModel curve;
    std::vector<InvolutionRecord> involutions; // hyperelliptic: both lifts of each good map
    std::vector<Matrix> order_four;            // hyperelliptic maps whose lifts have order 4
    std::vector<HypSplit> hyp_splits;
    std::vector<QuarticSplit> quartic_splits;
    std::optional<CompleteSplit> complete;
    std::optional<LPolynomial> l_c; // computed only when there is something to certify
    bool consistent = false;

    /// Subset of NONE, HYP_SPLIT, QUARTIC_SPLIT, COMPLETE, in that order.
    std::vector<std::string> kinds() const;
};

/// Involution search, quotients and L-polynomial certificates for a genus-3 curve.
/// Throws CertificateFailed when an identity fails, BudgetExceeded, InvalidInput for
/// other models.
DecompositionReport analyze(const CurveModel &c, unsigned threads = 0);

struct CertificateCheck {
    bool ok = true;
    std::vector<std::string> failures; // "<kind>: <lhs> != <rhs>"
};

/// Recounts every curve in the report and re-checks each identity exactly.
CertificateCheck verify_certificate(const DecompositionReport &r, unsigned threads = 0);

/// First commuting pair of distinct long involutions, in record order.
std::optional<std::pair<InvolutionRecord, InvolutionRecord>> detect_howe(const std::vector<InvolutionRecord> &records);

} // namespace richelot
