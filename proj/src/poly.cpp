#include "richelot/poly.hpp"

#include "richelot/error.hpp"
#include "richelot/linalg.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace richelot {

UniPoly::UniPoly(FieldPtr field) : field_(std::move(field)) {}

UniPoly::UniPoly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs))
{
    trim();
}

UniPoly UniPoly::from_ints(FieldPtr field, std::initializer_list<std::int64_t> coeffs)
{
    return from_ints(std::move(field), std::vector<std::int64_t>(coeffs));
}

UniPoly UniPoly::from_ints(FieldPtr field, const std::vector<std::int64_t> &coeffs)
{
    std::vector<Elem> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs)
        c.push_back(field->from_int(v));
    return UniPoly(std::move(field), std::move(c));
}

UniPoly UniPoly::constant(FieldPtr field, Elem c) { return UniPoly(std::move(field), {c}); }

UniPoly UniPoly::x(FieldPtr field) { return UniPoly(std::move(field), {Elem{0}, Elem{1}}); }

UniPoly UniPoly::linear(FieldPtr field, Elem root)
{
    const Elem nr = field->neg(root);
    return UniPoly(std::move(field), {nr, Elem{1}});
}

void UniPoly::trim()
{
    while (!c_.empty() && c_.back().v == 0)
        c_.pop_back();
}

Elem UniPoly::eval(Elem x) const
{
    const Field &F = *field_;
    Elem r{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = F.add(F.mul(r, x), *it);
    return r;
}

UniPoly UniPoly::derivative() const
{
    const Field &F = *field_;
    std::vector<Elem> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(F.mul(F.from_int(static_cast<std::int64_t>(i)), c_[i]));
    return UniPoly(field_, std::move(d));
}

UniPoly UniPoly::monic() const
{
    if (c_.empty())
        return *this;
    return scaled(field_->inv(c_.back()));
}

UniPoly UniPoly::scaled(Elem s) const
{
    std::vector<Elem> d = c_;
    for (auto &e : d)
        e = field_->mul(e, s);
    return UniPoly(field_, std::move(d));
}

UniPoly UniPoly::operator+(const UniPoly &rhs) const
{
    if (field_ != rhs.field_)
        throw Error(Errc::FieldMismatch, "polynomials over different fields");
    std::vector<Elem> d(std::max(c_.size(), rhs.c_.size()));
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = field_->add(coeff(i), rhs.coeff(i));
    return UniPoly(field_, std::move(d));
}

UniPoly UniPoly::operator-(const UniPoly &rhs) const { return *this + (-rhs); }

UniPoly UniPoly::operator-() const
{
    std::vector<Elem> d = c_;
    for (auto &e : d)
        e = field_->neg(e);
    return UniPoly(field_, std::move(d));
}

UniPoly UniPoly::operator*(const UniPoly &rhs) const
{
    if (field_ != rhs.field_)
        throw Error(Errc::FieldMismatch, "polynomials over different fields");
    if (c_.empty() || rhs.c_.empty())
        return UniPoly(field_);
    const Field &F = *field_;
    std::vector<Elem> d(c_.size() + rhs.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].v == 0)
            continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j)
            d[i + j] = F.add(d[i + j], F.mul(c_[i], rhs.c_[j]));
    }
    return UniPoly(field_, std::move(d));
}

void UniPoly::divmod(const UniPoly &divisor, UniPoly &quot, UniPoly &rem) const
{
    if (divisor.is_zero())
        throw Error(Errc::ZeroPolynomial, "division by the zero polynomial");
    if (field_ != divisor.field_)
        throw Error(Errc::FieldMismatch, "polynomials over different fields");
    const Field &F = *field_;
    std::vector<Elem> r = c_;
    const std::size_t dd = divisor.c_.size() - 1;
    if (r.size() <= dd) {
        quot = UniPoly(field_);
        rem = *this;
        return;
    }
    std::vector<Elem> q(r.size() - dd);
    const Elem lc_inv = F.inv(divisor.lead());
    for (std::size_t i = r.size(); i-- > dd;) {
        const Elem c = F.mul(r[i], lc_inv);
        q[i - dd] = c;
        if (c.v == 0)
            continue;
        for (std::size_t j = 0; j <= dd; ++j)
            r[i - dd + j] = F.sub(r[i - dd + j], F.mul(c, divisor.c_[j]));
    }
    r.resize(dd);
    quot = UniPoly(field_, std::move(q));
    rem = UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator/(const UniPoly &rhs) const
{
    UniPoly q, r;
    divmod(rhs, q, r);
    return q;
}

UniPoly UniPoly::operator%(const UniPoly &rhs) const
{
    UniPoly q, r;
    divmod(rhs, q, r);
    return r;
}

std::string UniPoly::to_string() const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].v == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << field_->to_string(c_[i]);
        if (i >= 1)
            os << "*x";
        if (i >= 2)
            os << '^' << i;
    }
    return os.str();
}

UniPoly gcd(const UniPoly &a, const UniPoly &b)
{
    UniPoly x = a.monic(), y = b.monic();
    while (!y.is_zero()) {
        UniPoly r = (x % y).monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

UniPoly powmod(const UniPoly &base, std::uint64_t e, const UniPoly &m)
{
    UniPoly r = UniPoly::constant(m.field(), Elem{1}) % m;
    UniPoly b = base % m;
    while (e) {
        if (e & 1)
            r = (r * b) % m;
        e >>= 1;
        if (e)
            b = (b * b) % m;
    }
    return r;
}

bool squarefree(const UniPoly &f)
{
    if (f.is_zero())
        throw Error(Errc::ZeroPolynomial, "squarefreeness of the zero polynomial");
    return gcd(f, f.derivative()).degree() <= 0;
}

Elem resultant(const UniPoly &f, const UniPoly &g)
{
    const FieldPtr &field = f.field() ? f.field() : g.field();
    if (f.is_zero() && g.is_zero())
        throw Error(Errc::BothZero, "resultant of two zero polynomials");
    if (f.is_zero() || g.is_zero()) {
        const UniPoly &other = f.is_zero() ? g : f;
        return other.degree() == 0 ? Elem{1} : Elem{0};
    }
    const int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0)
        return Elem{1};
    const std::size_t size = static_cast<std::size_t>(m + n);
    Matrix s(field, size, size);
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i)
            s(r, r + i) = f.coeff(static_cast<std::size_t>(m - i));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i)
            s(n + r, r + i) = g.coeff(static_cast<std::size_t>(n - i));
    return s.determinant();
}

namespace {

// For f with f' = 0 (so f = h(x^p)), returns h^(1/p).
UniPoly pth_root(const UniPoly &f)
{
    const Field &F = *f.field();
    const std::uint32_t p = F.characteristic();
    const std::uint64_t root_exp = F.order() / p; // inverse of Frobenius on F_q
    std::vector<Elem> out;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p)
        out.push_back(F.pow(f.coeffs()[i], root_exp));
    return UniPoly(f.field(), std::move(out));
}

} // namespace

UniPoly radical(const UniPoly &f)
{
    if (f.is_zero())
        throw Error(Errc::ZeroPolynomial, "radical of the zero polynomial");
    const UniPoly one = UniPoly::constant(f.field(), Elem{1});
    if (f.degree() <= 0)
        return one;
    const UniPoly fm = f.monic();
    const UniPoly d = fm.derivative();
    if (d.is_zero())
        return radical(pth_root(fm));
    const UniPoly g = gcd(fm, d);
    const UniPoly s = (fm / g).monic(); // irreducibles of multiplicity prime to p
    UniPoly t = g;
    for (UniPoly c = gcd(t, s); c.degree() > 0; c = gcd(t, s))
        t = t / c;
    if (t.degree() <= 0)
        return s;
    return (s * radical(pth_root(t.monic()))).monic();
}

int distinct_root_count(const UniPoly &f) { return radical(f).degree(); }

int rational_root_count(const UniPoly &f)
{
    if (f.is_zero())
        throw Error(Errc::ZeroPolynomial, "root count of the zero polynomial");
    if (f.degree() <= 0)
        return 0;
    const UniPoly x = UniPoly::x(f.field());
    const UniPoly xq = powmod(x, f.field()->order(), f);
    return gcd(f, xq - x).degree();
}

namespace {

void split_roots(const UniPoly &g, std::vector<Elem> &out)
{
    const Field &F = *g.field();
    if (g.degree() <= 0)
        return;
    if (g.degree() == 1) {
        const UniPoly m = g.monic();
        out.push_back(F.neg(m.coeff(0)));
        return;
    }
    const std::uint64_t q = F.order();
    if (q <= 64) {
        for (std::uint64_t i = 0; i < q; ++i)
            if (g.eval(Elem{static_cast<std::uint32_t>(i)}).v == 0)
                out.push_back(Elem{static_cast<std::uint32_t>(i)});
        return;
    }
    const UniPoly one = UniPoly::constant(g.field(), Elem{1});
    for (std::uint64_t a = 0; a < q; ++a) {
        const UniPoly shift(g.field(), {Elem{static_cast<std::uint32_t>(a)}, Elem{1}});
        const UniPoly h = gcd(g, powmod(shift, (q - 1) / 2, g) - one);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            split_roots(h, out);
            split_roots((g / h).monic(), out);
            return;
        }
    }
    throw Error(Errc::InvalidInput, "root splitting failed");
}

} // namespace

std::vector<Elem> roots(const UniPoly &f)
{
    if (f.is_zero())
        throw Error(Errc::ZeroPolynomial, "roots of the zero polynomial");
    std::vector<Elem> out;
    if (f.degree() <= 0)
        return out;
    const UniPoly x = UniPoly::x(f.field());
    const UniPoly g = gcd(f, powmod(x, f.field()->order(), f) - x);
    split_roots(g, out);
    std::sort(out.begin(), out.end());
    return out;
}

unsigned splitting_degree(const UniPoly &f)
{
    UniPoly rest = radical(f);
    if (rest.degree() <= 0)
        return 1;
    const std::uint64_t q = f.field()->order();
    const UniPoly x = UniPoly::x(f.field());
    UniPoly h = x % rest;
    unsigned s = 1;
    for (unsigned d = 1; rest.degree() > 0; ++d) {
        h = powmod(h, q, rest);
        const UniPoly g = gcd(rest, h - x);
        if (g.degree() > 0) {
            s = std::lcm(s, d);
            rest = (rest / g).monic();
            h = h % rest;
        }
    }
    return s;
}

const Extension &Extension::of(const FieldPtr &base, unsigned degree)
{
    if (degree == 0)
        throw Error(Errc::InvalidInput, "extension degree must be positive");
    static std::mutex mutex;
    static std::map<std::pair<const Field *, unsigned>, std::unique_ptr<Extension>> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find({base.get(), degree});
        if (it != cache.end())
            return *it->second;
    }

    std::unique_ptr<Extension> ext(new Extension());
    ext->base_ = base;
    ext->degree_ = degree;
    ext->target_ = degree == 1 ? base : Field::build_extension(base->characteristic(), base->degree() * degree);
    const Field &T = *ext->target_;
    Elem gen = T.one();
    if (base->degree() > 1 && degree > 1) {
        std::vector<Elem> mod;
        for (auto c : base->modulus())
            mod.push_back(T.from_int(c));
        const auto rs = roots(UniPoly(ext->target_, mod));
        if (rs.empty())
            throw Error(Errc::InvalidInput, "modulus has no root in the extension");
        gen = rs.front();
    } else if (base->degree() > 1) {
        gen = base->generator();
    }
    Elem power = T.one();
    for (unsigned i = 0; i < base->degree(); ++i) {
        ext->basis_images_.push_back(power);
        power = T.mul(power, gen);
    }

    std::lock_guard lock(mutex);
    auto &slot = cache[{base.get(), degree}];
    if (!slot)
        slot = std::move(ext);
    return *slot;
}

Elem Extension::map(Elem a) const
{
    if (degree_ == 1)
        return a;
    const Field &T = *target_;
    if (base_->degree() == 1)
        return T.from_int(a.v);
    const auto c = base_->coeffs(a);
    Elem r{};
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0)
            r = T.add(r, T.mul(T.from_int(c[i]), basis_images_[i]));
    return r;
}

UniPoly Extension::map(const UniPoly &f) const
{
    std::vector<Elem> c;
    c.reserve(f.coeffs().size());
    for (auto e : f.coeffs())
        c.push_back(map(e));
    return UniPoly(target_, std::move(c));
}

bool Extension::preimage(Elem a, Elem &out) const
{
    if (degree_ == 1) {
        out = a;
        return true;
    }
    const Field &T = *target_;
    const unsigned kb = base_->degree(), kt = T.degree();
    const std::uint32_t p = T.characteristic();
    const FieldPtr fp = Field::build_extension(p, 1);
    // Columns: images of the base basis, then the target vector.
    Matrix m(fp, kt, kb + 1);
    for (unsigned j = 0; j < kb; ++j) {
        const auto col = T.coeffs(basis_images_[j]);
        for (unsigned i = 0; i < kt; ++i)
            m(i, j) = Elem{col[i]};
    }
    const auto target = T.coeffs(a);
    for (unsigned i = 0; i < kt; ++i)
        m(i, kb) = Elem{target[i]};
    const auto ker = m.kernel();
    for (const auto &v : ker) {
        if (v[kb].v == 0)
            continue;
        // v = (c, t) with sum c_j b_j + t a = 0, so a = -(1/t) sum c_j b_j.
        const Elem s = fp->neg(fp->inv(v[kb]));
        std::vector<std::uint32_t> coeffs(kb);
        for (unsigned j = 0; j < kb; ++j)
            coeffs[j] = fp->mul(v[j], s).v;
        out = base_->from_coeffs(coeffs);
        return true;
    }
    return false;
}

} // namespace richelot
