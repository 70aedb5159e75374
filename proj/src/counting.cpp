#include "richelot/counting.hpp"

#include "richelot/error.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <type_traits>

namespace richelot {

namespace {

std::atomic<unsigned> g_threads{1};

constexpr std::uint64_t kChunks = 64;

// Sum of body(begin, end) over a fixed partition of [0, count) into kChunks ranges.
template <class Body> std::int64_t parallel_sum(std::uint64_t count, unsigned threads, Body body)
{
    std::vector<std::int64_t> partial(kChunks, 0);
    auto run_chunk = [&](std::uint64_t c) {
        const std::uint64_t begin = count * c / kChunks, end = count * (c + 1) / kChunks;
        if (begin < end)
            partial[c] = body(begin, end);
    };
    if (threads <= 1 || count < 4096) {
        for (std::uint64_t c = 0; c < kChunks; ++c)
            run_chunk(c);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        std::exception_ptr failure;
        std::mutex failure_lock;
        for (unsigned t = 0; t < std::min<unsigned>(threads, kChunks); ++t)
            pool.emplace_back([&] {
                try {
                    for (std::uint64_t c; (c = next.fetch_add(1)) < kChunks;)
                        run_chunk(c);
                } catch (...) {
                    std::lock_guard lock(failure_lock);
                    failure = std::current_exception();
                }
            });
        for (auto &th : pool)
            th.join();
        if (failure)
            std::rethrow_exception(failure);
    }
    std::int64_t total = 0;
    for (auto v : partial)
        total += v;
    return total;
}

std::uint64_t checked_power(std::uint64_t q, unsigned n)
{
    std::uint64_t Q = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (Q > kFieldBudget / q + 1)
            return std::numeric_limits<std::uint64_t>::max();
        Q *= q;
    }
    return Q;
}

std::int64_t count_double_cover(const BinaryForm &form, unsigned threads)
{
    const Field &F = *form.field();
    const auto &c = form.coeffs();
    const std::int64_t affine = parallel_sum(F.order(), threads, [&](std::uint64_t b, std::uint64_t e) {
        std::int64_t s = 0;
        for (std::uint64_t i = b; i < e; ++i) {
            const Elem x{static_cast<std::uint32_t>(i)};
            Elem v{};
            for (std::size_t j = c.size(); j-- > 0;)
                v = F.add(F.mul(v, x), c[j]);
            s += 1 + F.chi(v);
        }
        return s;
    });
    return affine + 1 + F.chi(c.back());
}

std::int64_t howe_point(const Field &F, Elem a, Elem b, Elem u1, Elem u2)
{
    if (a.v != 0 && b.v != 0)
        return (1 + F.chi(a)) * (1 + F.chi(b));
    if (a.v != 0)
        return 1 + F.chi(a);
    if (b.v != 0)
        return 1 + F.chi(b);
    // Common branch point: the resolution has two branches, swapped unless u1*u2 is a square.
    return 1 + F.chi(F.mul(u1, u2));
}

std::int64_t count_howe(const HoweSystem &h, unsigned threads)
{
    const Field &F = *h.field();
    const UniPoly d1 = h.f1.derivative(), d2 = h.f2.derivative();
    const std::int64_t affine = parallel_sum(F.order(), threads, [&](std::uint64_t b, std::uint64_t e) {
        std::int64_t s = 0;
        for (std::uint64_t i = b; i < e; ++i) {
            const Elem x{static_cast<std::uint32_t>(i)};
            const Elem v1 = h.f1.eval(x), v2 = h.f2.eval(x);
            if (v1.v == 0 && v2.v == 0)
                s += howe_point(F, v1, v2, d1.eval(x), d2.eval(x));
            else
                s += howe_point(F, v1, v2, {}, {});
        }
        return s;
    });
    return affine + howe_point(F, h.form1.coeff(4), h.form2.coeff(4), h.form1.coeff(3), h.form2.coeff(3));
}

// Polynomials of degree <= 4 in fixed storage, for per-line root counting.
struct Small {
    Elem a[5]{};
    int deg = -1;

    void trim()
    {
        while (deg >= 0 && a[deg].v == 0)
            --deg;
    }
};

// r = r mod m, m monic of degree >= 1.
void reduce(const Field &F, Elem *r, int rdeg, const Small &m)
{
    for (int d = rdeg; d >= m.deg; --d) {
        const Elem c = r[d];
        if (c.v == 0)
            continue;
        for (int i = 0; i <= m.deg; ++i)
            r[d - m.deg + i] = F.sub(r[d - m.deg + i], F.mul(c, m.a[i]));
    }
}

// (a * b) mod m for a, b of degree < deg m.
void mulmod(const Field &F, const Elem *a, const Elem *b, Elem *out, const Small &m)
{
    Elem prod[8]{};
    const int d = m.deg;
    for (int i = 0; i < d; ++i) {
        if (a[i].v == 0)
            continue;
        for (int j = 0; j < d; ++j)
            prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
    }
    reduce(F, prod, 2 * d - 2, m);
    for (int i = 0; i < d; ++i)
        out[i] = prod[i];
}

int gcd_degree(const Field &F, Small a, Small b)
{
    a.trim();
    b.trim();
    while (b.deg >= 0) {
        // a mod b
        const Elem inv = F.inv(b.a[b.deg]);
        for (int d = a.deg; d >= b.deg; --d) {
            const Elem c = F.mul(a.a[d], inv);
            if (c.v == 0)
                continue;
            for (int i = 0; i <= b.deg; ++i)
                a.a[d - b.deg + i] = F.sub(a.a[d - b.deg + i], F.mul(c, b.a[i]));
        }
        a.trim();
        std::swap(a, b);
    }
    return a.deg;
}

// Distinct roots in F of a nonzero polynomial of degree <= 4.
int small_root_count(const Field &F, Small h)
{
    h.trim();
    if (h.deg <= 0)
        return 0;
    if (h.deg == 1)
        return 1;
    if (h.deg == 2) {
        const Elem disc = F.sub(F.sqr(h.a[1]), F.mul(F.from_int(4), F.mul(h.a[2], h.a[0])));
        return 1 + F.chi(disc);
    }
    if (F.order() <= 64) {
        int n = 0;
        for (std::uint64_t i = 0; i < F.order(); ++i) {
            const Elem x{static_cast<std::uint32_t>(i)};
            Elem v{};
            for (int j = h.deg; j >= 0; --j)
                v = F.add(F.mul(v, x), h.a[j]);
            n += v.v == 0;
        }
        return n;
    }
    Small m = h;
    const Elem inv = F.inv(m.a[m.deg]);
    for (int i = 0; i <= m.deg; ++i)
        m.a[i] = F.mul(m.a[i], inv);
    // x^Q mod m by square-and-multiply.
    Elem acc[4]{}, base[4]{};
    acc[0] = F.one();
    base[1] = F.one();
    for (std::uint64_t e = F.order(); e > 0; e >>= 1) {
        if (e & 1)
            mulmod(F, acc, base, acc, m);
        if (e > 1)
            mulmod(F, base, base, base, m);
    }
    Small t;
    for (int i = 0; i < m.deg; ++i)
        t.a[i] = acc[i];
    t.a[1] = F.sub(t.a[1], F.one());
    t.deg = 3;
    return gcd_degree(F, m, t);
}

std::int64_t count_quartic(const TernaryForm &f, unsigned threads)
{
    const Field &F = *f.field();
    const std::uint64_t Q = F.order();
    // Lines through (1:0:0), indexed by (1:z) for z < Q and (0:1) last.
    const std::int64_t lines = parallel_sum(Q + 1, threads, [&](std::uint64_t b, std::uint64_t e) {
        std::int64_t s = 0;
        for (std::uint64_t i = b; i < e; ++i) {
            const Elem y = i < Q ? F.one() : F.zero();
            const Elem z = i < Q ? Elem{static_cast<std::uint32_t>(i)} : F.one();
            const UniPoly h = f.restrict_x(y, z);
            if (h.is_zero()) {
                s += static_cast<std::int64_t>(Q);
                continue;
            }
            Small sm;
            sm.deg = h.degree();
            for (int j = 0; j <= sm.deg; ++j)
                sm.a[j] = h.coeff(j);
            s += small_root_count(F, sm);
        }
        return s;
    });
    return lines + (f.coeff(4, 0).v == 0 ? 1 : 0);
}

using i128 = __int128;

std::int64_t narrow(i128 v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw Error(Errc::Overflow, "L-polynomial coefficient exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

i128 ipow(i128 q, unsigned n)
{
    i128 r = 1;
    for (unsigned i = 0; i < n; ++i)
        r *= q;
    return r;
}

// Power sums p_1..p_nmax of the inverse roots, from the coefficients.
std::vector<i128> power_sums(const LPolynomial &L, unsigned nmax)
{
    const int deg = static_cast<int>(L.c.size()) - 1;
    auto e = [&](int i) -> i128 { return i > deg ? 0 : ((i % 2) ? -L.c[i] : L.c[i]); };
    std::vector<i128> p(nmax + 1, 0);
    for (unsigned n = 1; n <= nmax; ++n) {
        i128 s = 0;
        for (unsigned i = 1; i < n; ++i)
            s += ((i % 2) ? 1 : -1) * e(static_cast<int>(i)) * p[n - i];
        s += ((n % 2) ? 1 : -1) * static_cast<i128>(n) * e(static_cast<int>(n));
        p[n] = s;
    }
    return p;
}

} // namespace

void set_default_threads(unsigned n) { g_threads = std::max(1u, n); }
unsigned default_threads() { return g_threads; }

std::int64_t count_points(const CurveModel &c, unsigned n, unsigned threads)
{
    if (n == 0)
        throw Error(Errc::InvalidInput, "extension degree must be positive");
    if (threads == 0)
        threads = default_threads();
    const FieldPtr &base = field_of(c);
    const std::uint64_t Q = checked_power(base->order(), n);
    if (Q > kFieldBudget)
        throw Error(Errc::BudgetExceeded, "counting over F_" + std::to_string(base->order()) + "^" + std::to_string(n) +
                                              " exceeds the 10^7 element budget");
    const auto &ext = Extension::of(base, n);
    const CurveModel big = n == 1 ? c : base_change(c, ext);
    return std::visit(
        [&](const auto &m) -> std::int64_t {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, PlaneQuartic>)
                return count_quartic(m.form, threads);
            else if constexpr (std::is_same_v<T, HoweSystem>)
                return count_howe(m, threads);
            else
                return count_double_cover(m.form, threads);
        },
        big);
}

std::vector<std::int64_t> point_counts(const CurveModel &c, unsigned nmax, unsigned threads)
{
    std::vector<std::int64_t> out;
    for (unsigned n = 1; n <= nmax; ++n)
        out.push_back(count_points(c, n, threads));
    return out;
}

bool LPolynomial::functional_equation_holds() const
{
    if (c.size() != static_cast<std::size_t>(2 * genus + 1) || c[0] != 1)
        return false;
    for (int i = 0; i <= genus; ++i)
        if (static_cast<i128>(c[2 * genus - i]) != ipow(q, genus - i) * c[i])
            return false;
    return true;
}

std::int64_t LPolynomial::predicted_count(unsigned n) const
{
    const auto p = power_sums(*this, n);
    return narrow(ipow(q, n) + 1 - p[n]);
}

LPolynomial LPolynomial::over_quadratic_extension() const
{
    // L'(T^2) = L(T) L(-T).
    const std::size_t m = c.size();
    std::vector<i128> prod(2 * m - 1, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            prod[i + j] += static_cast<i128>(c[i]) * ((j % 2) ? -c[j] : c[j]);
    LPolynomial out{q * q, genus, {}};
    for (std::size_t i = 0; i < m; ++i)
        out.c.push_back(narrow(prod[2 * i]));
    return out;
}

std::string LPolynomial::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0)
            continue;
        if (!s.empty())
            s += c[i] < 0 ? " - " : " + ";
        else if (c[i] < 0)
            s += "-";
        const std::int64_t a = c[i] < 0 ? -c[i] : c[i];
        if (i == 0 || a != 1)
            s += std::to_string(a);
        if (i >= 1)
            s += "T";
        if (i >= 2)
            s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

LPolynomial operator*(const LPolynomial &a, const LPolynomial &b)
{
    if (a.q != b.q)
        throw Error(Errc::FieldMismatch, "L-polynomials over different fields");
    std::vector<i128> prod(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            prod[i + j] += static_cast<i128>(a.c[i]) * b.c[j];
    LPolynomial out{a.q, a.genus + b.genus, {}};
    for (auto v : prod)
        out.c.push_back(narrow(v));
    return out;
}

LPolynomial l_polynomial_from_counts(std::uint64_t q, int genus, const std::vector<std::int64_t> &counts)
{
    if (counts.size() < static_cast<std::size_t>(genus))
        throw Error(Errc::InvalidInput, "need N_1..N_g to fit the L-polynomial");
    std::vector<i128> p(genus + 1, 0), e(genus + 1, 0);
    for (int n = 1; n <= genus; ++n)
        p[n] = ipow(q, n) + 1 - counts[n - 1];
    e[0] = 1;
    for (int k = 1; k <= genus; ++k) {
        i128 s = 0;
        for (int i = 1; i <= k; ++i)
            s += ((i % 2) ? 1 : -1) * e[k - i] * p[i];
        if (s % k != 0)
            throw Error(Errc::InconsistentCounts, "Newton identity yields a non-integral coefficient");
        e[k] = s / k;
    }
    LPolynomial L{q, genus, std::vector<std::int64_t>(2 * genus + 1, 0)};
    for (int i = 0; i <= genus; ++i) {
        L.c[i] = narrow((i % 2) ? -e[i] : e[i]);
        L.c[2 * genus - i] = narrow(ipow(q, genus - i) * L.c[i]);
    }
    for (std::size_t n = genus + 1; n <= counts.size(); ++n)
        if (L.predicted_count(static_cast<unsigned>(n)) != counts[n - 1])
            throw Error(Errc::InconsistentCounts,
                        "N_" + std::to_string(n) + " = " + std::to_string(counts[n - 1]) + " but the fitted L predicts " +
                            std::to_string(L.predicted_count(static_cast<unsigned>(n))));
    return L;
}

LPolynomial l_polynomial(const CurveModel &c, unsigned threads)
{
    const int g = genus(c);
    const std::uint64_t q = field_of(c)->order();
    double qn = 1;
    for (int i = 0; i <= g; ++i)
        qn *= double(q);
    const unsigned nmax = static_cast<unsigned>(qn <= 1e7 ? g + 1 : g);
    const auto counts = point_counts(c, nmax, threads);
    return l_polynomial_from_counts(field_of(c)->order(), g, counts);
}

LPolynomial l_divide(const LPolynomial &lc, const LPolynomial &le)
{
    if (lc.q != le.q)
        throw Error(Errc::FieldMismatch, "L-polynomials over different fields");
    if (le.c.empty() || le.c[0] != 1 || le.c.size() > lc.c.size())
        throw Error(Errc::NotDivisible, "divisor is not a smaller L-polynomial");
    const std::size_t qdeg = lc.c.size() - le.c.size();
    std::vector<i128> quot(qdeg + 1, 0);
    for (std::size_t i = 0; i <= qdeg; ++i) {
        i128 s = lc.c[i];
        for (std::size_t j = 1; j < le.c.size() && j <= i; ++j)
            s -= static_cast<i128>(le.c[j]) * quot[i - j];
        quot[i] = s;
    }
    for (std::size_t i = 0; i < lc.c.size(); ++i) {
        i128 s = 0;
        for (std::size_t j = 0; j < le.c.size(); ++j)
            if (i >= j && i - j <= qdeg)
                s += static_cast<i128>(le.c[j]) * quot[i - j];
        if (s != lc.c[i])
            throw Error(Errc::NotDivisible, le.to_string() + " does not divide " + lc.to_string());
    }
    LPolynomial out{lc.q, lc.genus - le.genus, {}};
    for (auto v : quot)
        out.c.push_back(narrow(v));
    if (!out.functional_equation_holds())
        throw Error(Errc::BrokenFunctionalEquation, "quotient " + out.to_string() + " violates the functional equation");
    return out;
}

} // namespace richelot
