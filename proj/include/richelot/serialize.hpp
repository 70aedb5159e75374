#pragma once

#include "richelot/decomposition.hpp"

#include <json.hpp>

namespace richelot {

using Json = nlohmann::ordered_json;

/// {"p": p, "k": k}.
Json to_json(const FieldPtr &field);
FieldPtr field_from_json(const Json &j);

/// An integer over prime fields, else the coefficient array, least significant first.
/// Input accepts either shape (integers are reduced mod p).
Json to_json(const Field &F, Elem a);
Elem elem_from_json(const Field &F, const Json &j);

/// Ascending coefficient arrays.
Json to_json(const UniPoly &f);
UniPoly poly_from_json(const FieldPtr &F, const Json &j);

/// {"i,j": c} for c x^i w^j; zero coefficients omitted.
Json to_json(const BinaryForm &f);
BinaryForm binary_form_from_json(const FieldPtr &F, const Json &j);

/// {"i,j,k": c} for c x^i y^j z^k.
Json to_json(const TernaryForm &f);
TernaryForm ternary_form_from_json(const FieldPtr &F, const Json &j);

/// Rows of elements.
Json to_json(const Matrix &m);

/**
 * Curve files: {"model": ..., "field": {...}, "f": ...}. Double covers take a binary form
 * map or an ascending coefficient array, quartics a ternary form map, Howe systems
 * [f1, f2] as arrays. Every model is validated; errors surface as Error.
 */
Json to_json(const CurveModel &c);
CurveModel curve_from_json(const Json &j);

Json to_json(const LPolynomial &l);
Json to_json(const InvolutionRecord &r);
Json to_json(const DecompositionReport &r, const CertificateCheck &check);

} // namespace richelot
