#include "richelot/field.hpp"

#include "richelot/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace richelot {

namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;

// Dense polynomials over Z/p, ascending, used only while searching for a modulus.
using ZpPoly = std::vector<std::uint32_t>;

void trim(ZpPoly &a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        const std::int64_t qt = r / nr;
        t = std::exchange(nt, t - qt * nt);
        r = std::exchange(nr, r - qt * nr);
    }
    return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

ZpPoly zp_mod(ZpPoly a, const ZpPoly &m, std::uint32_t p)
{
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint32_t lc_inv = inv_mod(m.back(), p);
    while (a.size() > dm) {
        const std::uint64_t c = std::uint64_t{a.back()} * lc_inv % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
        trim(a);
    }
    return a;
}

ZpPoly zp_mulmod(const ZpPoly &a, const ZpPoly &b, const ZpPoly &m, std::uint32_t p)
{
    if (a.empty() || b.empty())
        return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    return zp_mod(std::move(r), m, p);
}

ZpPoly zp_powmod(ZpPoly base, std::uint64_t e, const ZpPoly &m, std::uint32_t p)
{
    ZpPoly r{1};
    base = zp_mod(std::move(base), m, p);
    while (e) {
        if (e & 1)
            r = zp_mulmod(r, base, m, p);
        base = zp_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint32_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        a = zp_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

// x^(p^j) mod m, by repeated p-th powering.
ZpPoly zp_frobenius_power(const ZpPoly &m, std::uint32_t p, unsigned j)
{
    ZpPoly x{0, 1};
    ZpPoly r = zp_mod(x, m, p);
    for (unsigned i = 0; i < j; ++i)
        r = zp_powmod(r, p, m, p);
    return r;
}

ZpPoly zp_sub(ZpPoly a, const ZpPoly &b, std::uint32_t p)
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

// Rabin's test.
bool zp_irreducible(const ZpPoly &m, std::uint32_t p)
{
    const unsigned k = static_cast<unsigned>(m.size() - 1);
    const ZpPoly x{0, 1};
    if (zp_sub(zp_frobenius_power(m, p, k), zp_mod(x, m, p), p).size() != 0)
        return false;
    for (unsigned r = 2; r <= k; ++r) {
        if (k % r != 0 || !is_prime(r))
            continue;
        ZpPoly h = zp_sub(zp_frobenius_power(m, p, k / r), x, p);
        ZpPoly g = zp_gcd(m, h, p);
        if (g.size() > 1)
            return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

} // namespace

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

FieldPtr Field::build(std::uint32_t p, unsigned k)
{
    if (k > 6)
        throw Error(Errc::TooLarge, "extension degree " + std::to_string(k) + " exceeds 6");
    return build_extension(p, k);
}

FieldPtr Field::build_extension(std::uint32_t p, unsigned k)
{
    if (p == 2)
        throw Error(Errc::EvenCharacteristic, "characteristic 2 is not supported");
    if (!is_prime(p))
        throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (p > 65536)
        throw Error(Errc::TooLarge, "characteristic exceeds 2^16");
    if (k == 0)
        throw Error(Errc::InvalidInput, "extension degree must be positive");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > kFieldBudget)
            throw Error(Errc::TooLarge, "field order exceeds 10^7");
    }

    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, unsigned>, FieldPtr> cache;
    std::lock_guard lock(mutex);
    auto &slot = cache[{p, k}];
    if (!slot)
        slot = FieldPtr(new Field(p, k));
    return slot;
}

Field::Field(std::uint32_t p, unsigned k) : p_(p), k_(k), q_(1)
{
    for (unsigned i = 0; i < k; ++i)
        q_ *= p;

    if (k > 1) {
        // Candidates x^k + (lower part), lower part enumerated by its base-p index.
        const std::uint64_t count = q_;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            ZpPoly m(k + 1, 0);
            std::uint64_t t = idx;
            for (unsigned i = 0; i < k; ++i) {
                m[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            m[k] = 1;
            if (m[0] == 0)
                continue;
            if (zp_irreducible(m, p)) {
                modulus_ = std::move(m);
                break;
            }
        }
    }

    odd_part_ = q_ - 1;
    while ((odd_part_ & 1) == 0) {
        odd_part_ >>= 1;
        ++two_adicity_;
    }

    if (q_ <= kTableLimit)
        build_tables();

    for (std::uint64_t i = 2; i < q_; ++i) {
        if (chi_by_exponent(Elem{static_cast<std::uint32_t>(i)}) == -1) {
            nonresidue_ = Elem{static_cast<std::uint32_t>(i)};
            break;
        }
    }
}

void Field::build_tables()
{
    const std::uint64_t m = q_ - 1;
    const auto factors = prime_factors(m);
    Elem g{};
    for (std::uint64_t i = 2; i < q_; ++i) {
        const Elem c{static_cast<std::uint32_t>(i)};
        bool primitive = true;
        for (auto r : factors) {
            if (pow(c, m / r) == one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            g = c;
            break;
        }
    }

    std::vector<std::uint32_t> exp_table(m);
    std::vector<std::uint32_t> log_table(q_, 0);
    Elem cur = one();
    for (std::uint64_t i = 0; i < m; ++i) {
        exp_table[i] = cur.v;
        log_table[cur.v] = static_cast<std::uint32_t>(i);
        cur = (k_ == 1) ? Elem{static_cast<std::uint32_t>(std::uint64_t{cur.v} * g.v % p_)}
                        : mul_ext(cur, g);
    }
    exp_ = std::move(exp_table);
    log_ = std::move(log_table);
}

Elem Field::element(std::uint64_t index) const
{
    if (index >= q_)
        throw Error(Errc::InvalidInput, "element index out of range");
    return Elem{static_cast<std::uint32_t>(index)};
}

Elem Field::from_int(std::int64_t value) const noexcept
{
    std::int64_t r = value % static_cast<std::int64_t>(p_);
    if (r < 0)
        r += p_;
    return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const
{
    if (coeffs.size() > k_) {
        for (std::size_t i = k_; i < coeffs.size(); ++i)
            if (coeffs[i] % p_ != 0)
                throw Error(Errc::InvalidInput, "coefficient vector longer than extension degree");
    }
    std::uint64_t v = 0, scale = 1;
    for (std::size_t i = 0; i < std::min<std::size_t>(coeffs.size(), k_); ++i) {
        v += (coeffs[i] % p_) * scale;
        scale *= p_;
    }
    return Elem{static_cast<std::uint32_t>(v)};
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const
{
    std::vector<std::uint32_t> out(k_);
    std::uint32_t v = a.v;
    for (unsigned i = 0; i < k_; ++i) {
        out[i] = v % p_;
        v /= p_;
    }
    return out;
}

Elem Field::add_ext(Elem a, Elem b) const noexcept
{
    std::uint32_t x = a.v, y = b.v, r = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        std::uint32_t s = x % p_ + y % p_;
        if (s >= p_)
            s -= p_;
        r += s * scale;
        scale *= p_;
        x /= p_;
        y /= p_;
    }
    return Elem{r};
}

Elem Field::neg_ext(Elem a) const noexcept
{
    std::uint32_t x = a.v, r = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        const std::uint32_t d = x % p_;
        r += (d == 0 ? 0 : p_ - d) * scale;
        scale *= p_;
        x /= p_;
    }
    return Elem{r};
}

Elem Field::mul_ext(Elem a, Elem b) const noexcept
{
    std::uint64_t da[24] = {}, db[24] = {}, prod[48] = {};
    std::uint32_t x = a.v, y = b.v;
    for (unsigned i = 0; i < k_; ++i) {
        da[i] = x % p_;
        db[i] = y % p_;
        x /= p_;
        y /= p_;
    }
    for (unsigned i = 0; i < k_; ++i) {
        if (da[i] == 0)
            continue;
        for (unsigned j = 0; j < k_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    // Reduce by the monic modulus from the top.
    for (int d = 2 * static_cast<int>(k_) - 2; d >= static_cast<int>(k_); --d) {
        const std::uint64_t c = prod[d];
        if (c == 0)
            continue;
        prod[d] = 0;
        for (unsigned i = 0; i < k_; ++i) {
            const std::uint64_t t = c * modulus_[i] % p_;
            prod[d - k_ + i] = (prod[d - k_ + i] + p_ - t) % p_;
        }
    }
    std::uint64_t r = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        r += prod[i] * scale;
        scale *= p_;
    }
    return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept
{
    if (e == 0)
        return one();
    if (a.v == 0)
        return zero();
    if (!log_.empty()) {
        const std::uint64_t m = q_ - 1;
        const std::uint64_t l = (std::uint64_t{log_[a.v]} * (e % m)) % m;
        return Elem{exp_[l]};
    }
    Elem r = one();
    while (e) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem Field::inv(Elem a) const
{
    if (a.v == 0)
        throw Error(Errc::InvalidInput, "inverse of zero");
    if (k_ == 1)
        return Elem{inv_mod(a.v, p_)};
    if (!log_.empty()) {
        const std::uint32_t l = log_[a.v];
        return Elem{exp_[l == 0 ? 0 : (q_ - 1) - l]};
    }
    return pow(a, q_ - 2);
}

int Field::chi_by_exponent(Elem a) const noexcept
{
    if (a.v == 0)
        return 0;
    // Square-and-multiply directly, so this path never touches the log tables.
    Elem r = one(), b = a;
    std::uint64_t e = (q_ - 1) / 2;
    while (e) {
        if (e & 1)
            r = (k_ == 1) ? Elem{static_cast<std::uint32_t>(std::uint64_t{r.v} * b.v % p_)} : mul_ext(r, b);
        b = (k_ == 1) ? Elem{static_cast<std::uint32_t>(std::uint64_t{b.v} * b.v % p_)} : mul_ext(b, b);
        e >>= 1;
    }
    return r == one() ? 1 : -1;
}

std::optional<Elem> Field::sqrt(Elem a) const
{
    if (a.v == 0)
        return zero();
    if (chi(a) != 1)
        return std::nullopt;
    // Tonelli-Shanks.
    unsigned m = two_adicity_;
    Elem c = pow(nonresidue_, odd_part_);
    Elem x = pow(a, (odd_part_ + 1) / 2);
    Elem t = pow(a, odd_part_);
    while (t != one()) {
        unsigned i = 0;
        Elem t2 = t;
        while (t2 != one()) {
            t2 = sqr(t2);
            ++i;
        }
        Elem b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j)
            b = sqr(b);
        x = mul(x, b);
        c = sqr(b);
        t = mul(t, c);
        m = i;
    }
    const Elem other = neg(x);
    return std::min(x, other);
}

std::string Field::to_string(Elem a) const
{
    if (k_ == 1)
        return std::to_string(a.v);
    std::ostringstream os;
    os << '[';
    const auto c = coeffs(a);
    for (std::size_t i = 0; i < c.size(); ++i)
        os << (i ? "," : "") << c[i];
    os << ']';
    return os.str();
}

} // namespace richelot
