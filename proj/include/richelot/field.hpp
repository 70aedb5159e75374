#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace richelot {

/// Maximum field order the library will construct or enumerate over.
inline constexpr std::uint64_t kFieldBudget = 10'000'000;

/// An element of F_{p^k}, stored as the integer sum c_0 + c_1 p + ... + c_{k-1} p^{k-1}
/// of its coefficient vector over F_p. Equality is coefficient equality; the ordering is
/// the numeric ordering of that index.
struct Elem {
    std::uint32_t v = 0;

    friend constexpr auto operator<=>(Elem, Elem) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/**
 * Finite field F_{p^k} with odd characteristic p.
 *
 * Fields are interned: build(p, k) returns the same instance for the same arguments, so
 * pointer equality is field equality. The modulus of an extension is the smallest monic
 * irreducible polynomial, ordering candidates by the index of their non-leading
 * coefficients. Fields of order at most 2^22 carry discrete log tables; multiplication and
 * the quadratic character go through them.
 */
class Field {
  public:
    /// Public constructor: p odd prime with p <= 2^16, 1 <= k <= 6, p^k <= 10^7.
    static FieldPtr build(std::uint32_t p, unsigned k = 1);

    /// As build(), without the k <= 6 cap. Used for the extensions point counting needs.
    static FieldPtr build_extension(std::uint32_t p, unsigned k);

    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return k_; }
    std::uint64_t order() const noexcept { return q_; }

    /// Ascending coefficients of the monic modulus, size k+1. Empty for prime fields.
    const std::vector<std::uint32_t> &modulus() const noexcept { return modulus_; }

    Elem zero() const noexcept { return {0}; }
    Elem one() const noexcept { return {1}; }
    Elem element(std::uint64_t index) const;
    Elem from_int(std::int64_t value) const noexcept;
    Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coeffs(Elem a) const;

    /// The class of x in F_p[x]/(modulus). Only meaningful for k > 1.
    Elem generator() const noexcept { return {k_ > 1 ? p_ : 0}; }

    Elem add(Elem a, Elem b) const noexcept
    {
        if (k_ == 1) {
            const std::uint32_t s = a.v + b.v;
            return {s >= p_ ? s - p_ : s};
        }
        return add_ext(a, b);
    }

    Elem neg(Elem a) const noexcept
    {
        if (a.v == 0)
            return a;
        if (k_ == 1)
            return {p_ - a.v};
        return neg_ext(a);
    }

    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const noexcept
    {
        if (a.v == 0 || b.v == 0)
            return {0};
        if (k_ == 1)
            return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % p_)};
        if (!log_.empty()) {
            std::uint32_t s = log_[a.v] + log_[b.v];
            const auto m = static_cast<std::uint32_t>(q_ - 1);
            if (s >= m)
                s -= m;
            return {exp_[s]};
        }
        return mul_ext(a, b);
    }

    Elem sqr(Elem a) const noexcept { return mul(a, a); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    /// Multiplicative inverse; throws Error(InvalidInput) on zero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const noexcept { return a.v == 0; }

    /// Quadratic character: 0, +1 or -1.
    int chi(Elem a) const noexcept
    {
        if (a.v == 0)
            return 0;
        if (!log_.empty())
            return (log_[a.v] & 1u) ? -1 : 1;
        return chi_by_exponent(a);
    }

    /// Euler's criterion a^((q-1)/2); the reference the table path must agree with.
    int chi_by_exponent(Elem a) const noexcept;

    /// Canonical square root (the smaller of r, -r), or nullopt for a non-residue.
    std::optional<Elem> sqrt(Elem a) const;

    /// a^p.
    Elem frobenius(Elem a) const noexcept { return pow(a, p_); }

    bool has_log_tables() const noexcept { return !log_.empty(); }

    std::string to_string(Elem a) const;

  private:
    Field(std::uint32_t p, unsigned k);

    Elem add_ext(Elem a, Elem b) const noexcept;
    Elem neg_ext(Elem a) const noexcept;
    Elem mul_ext(Elem a, Elem b) const noexcept;
    void build_tables();

    std::uint32_t p_;
    unsigned k_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
    Elem nonresidue_{};
    unsigned two_adicity_ = 0;
    std::uint64_t odd_part_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

} // namespace richelot
