#include "richelot/forms.hpp"

#include "richelot/error.hpp"

#include <algorithm>

namespace richelot {

BinaryForm::BinaryForm(FieldPtr field, unsigned degree)
    : field_(std::move(field)), degree_(degree), c_(degree + 1)
{
}

BinaryForm::BinaryForm(FieldPtr field, unsigned degree, std::vector<Elem> coeffs)
    : field_(std::move(field)), degree_(degree), c_(std::move(coeffs))
{
    if (c_.size() > degree_ + 1) {
        for (std::size_t i = degree_ + 1; i < c_.size(); ++i)
            if (c_[i].v != 0)
                throw Error(Errc::WrongDegree, "coefficient beyond the form degree");
    }
    c_.resize(degree_ + 1);
}

BinaryForm BinaryForm::homogenize(const UniPoly &f, unsigned degree)
{
    if (f.degree() > static_cast<int>(degree))
        throw Error(Errc::WrongDegree, "polynomial degree exceeds form degree");
    return BinaryForm(f.field(), degree, f.coeffs());
}

bool BinaryForm::is_zero() const noexcept
{
    return std::all_of(c_.begin(), c_.end(), [](Elem e) { return e.v == 0; });
}

UniPoly BinaryForm::dehomogenize() const { return UniPoly(field_, c_); }

Elem BinaryForm::eval(Elem x, Elem w) const
{
    const Field &F = *field_;
    if (w.v == 0) {
        return F.mul(c_[degree_], F.pow(x, degree_));
    }
    if (w == F.one()) {
        Elem r{};
        for (std::size_t i = c_.size(); i-- > 0;)
            r = F.add(F.mul(r, x), c_[i]);
        return r;
    }
    // sum c_i x^i w^(d-i), Horner in t = x/w scaled by w^d.
    const Elem t = F.div(x, w);
    Elem r{};
    for (std::size_t i = c_.size(); i-- > 0;)
        r = F.add(F.mul(r, t), c_[i]);
    return F.mul(r, F.pow(w, degree_));
}

namespace {

// Coefficient-vector convolution (index = power of x).
std::vector<Elem> convolve(const Field &F, const std::vector<Elem> &a, const std::vector<Elem> &b)
{
    std::vector<Elem> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].v == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    return out;
}

} // namespace

BinaryForm BinaryForm::transform(const Matrix &m) const
{
    if (m.rows() != 2 || m.cols() != 2)
        throw Error(Errc::InvalidInput, "binary transform needs a 2x2 matrix");
    if (m.determinant().v == 0)
        throw Error(Errc::SingularMatrix, "transform matrix is singular");
    const Field &F = *field_;
    // Linear forms as coefficient vectors indexed by power of x: a x + b w -> [b, a].
    const std::vector<Elem> lx{m(0, 1), m(0, 0)};
    const std::vector<Elem> lw{m(1, 1), m(1, 0)};
    std::vector<std::vector<Elem>> px(degree_ + 1), pw(degree_ + 1);
    px[0] = pw[0] = {F.one()};
    for (unsigned i = 1; i <= degree_; ++i) {
        px[i] = convolve(F, px[i - 1], lx);
        pw[i] = convolve(F, pw[i - 1], lw);
    }
    std::vector<Elem> out(degree_ + 1);
    for (unsigned i = 0; i <= degree_; ++i) {
        if (c_[i].v == 0)
            continue;
        const auto term = convolve(F, px[i], pw[degree_ - i]);
        for (unsigned j = 0; j <= degree_; ++j)
            out[j] = F.add(out[j], F.mul(c_[i], term[j]));
    }
    return BinaryForm(field_, degree_, std::move(out));
}

BinaryForm BinaryForm::operator*(const BinaryForm &rhs) const
{
    if (field_ != rhs.field_)
        throw Error(Errc::FieldMismatch, "forms over different fields");
    return BinaryForm(field_, degree_ + rhs.degree_, convolve(*field_, c_, rhs.c_));
}

BinaryForm BinaryForm::operator+(const BinaryForm &rhs) const
{
    if (field_ != rhs.field_ || degree_ != rhs.degree_)
        throw Error(Errc::InvalidInput, "adding forms of different degree or field");
    std::vector<Elem> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        out[i] = field_->add(c_[i], rhs.c_[i]);
    return BinaryForm(field_, degree_, std::move(out));
}

BinaryForm BinaryForm::scaled(Elem s) const
{
    std::vector<Elem> out = c_;
    for (auto &e : out)
        e = field_->mul(e, s);
    return BinaryForm(field_, degree_, std::move(out));
}

bool BinaryForm::proportional_to(const BinaryForm &other, Elem *scale) const
{
    if (degree_ != other.degree_ || field_ != other.field_)
        return false;
    const Field &F = *field_;
    std::size_t pivot = c_.size();
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (other.c_[i].v != 0) {
            pivot = i;
            break;
        }
    if (pivot == c_.size())
        return false;
    const Elem s = F.div(c_[pivot], other.c_[pivot]);
    if (s.v == 0)
        return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != F.mul(s, other.c_[i]))
            return false;
    if (scale)
        *scale = s;
    return true;
}

unsigned BinaryForm::multiplicity_at_infinity() const
{
    unsigned m = 0;
    for (std::size_t i = c_.size(); i-- > 0 && c_[i].v == 0;)
        ++m;
    return m;
}

bool BinaryForm::squarefree() const
{
    if (is_zero())
        throw Error(Errc::ZeroPolynomial, "squarefreeness of the zero form");
    if (multiplicity_at_infinity() > 1)
        return false;
    const UniPoly f = dehomogenize();
    if (f.degree() <= 0)
        return true;
    return richelot::squarefree(f);
}

int BinaryForm::distinct_root_count() const
{
    if (is_zero())
        throw Error(Errc::ZeroPolynomial, "roots of the zero form");
    return richelot::distinct_root_count(dehomogenize()) + (multiplicity_at_infinity() > 0 ? 1 : 0);
}

std::vector<P1Point> BinaryForm::rational_roots() const
{
    if (is_zero())
        throw Error(Errc::ZeroPolynomial, "roots of the zero form");
    std::vector<P1Point> out;
    for (auto r : roots(dehomogenize()))
        out.push_back({r, field_->one()});
    if (multiplicity_at_infinity() > 0)
        out.push_back({field_->one(), field_->zero()});
    return out;
}

BinaryForm BinaryForm::base_change(const Extension &ext) const
{
    if (ext.base() != field_)
        throw Error(Errc::FieldMismatch, "extension does not start at the form's field");
    std::vector<Elem> out;
    out.reserve(c_.size());
    for (auto e : c_)
        out.push_back(ext.map(e));
    return BinaryForm(ext.target(), degree_, std::move(out));
}

BinaryForm form_gcd(const BinaryForm &a, const BinaryForm &b)
{
    const unsigned inf = std::min(a.multiplicity_at_infinity(), b.multiplicity_at_infinity());
    const UniPoly g = gcd(a.dehomogenize(), b.dehomogenize());
    return BinaryForm::homogenize(g, static_cast<unsigned>(std::max(g.degree(), 0)) + inf);
}

BinaryForm form_divide(const BinaryForm &a, const BinaryForm &b)
{
    if (b.degree() > a.degree())
        throw Error(Errc::NotDivisible, "divisor degree exceeds dividend degree");
    UniPoly q, r;
    a.dehomogenize().divmod(b.dehomogenize(), q, r);
    if (!r.is_zero() || a.multiplicity_at_infinity() < b.multiplicity_at_infinity())
        throw Error(Errc::NotDivisible, "binary forms do not divide");
    return BinaryForm::homogenize(q, a.degree() - b.degree());
}

TernaryForm::TernaryForm(FieldPtr field, unsigned degree)
    : field_(std::move(field)), degree_(degree), c_((degree + 1) * (degree + 1))
{
}

bool TernaryForm::is_zero() const noexcept
{
    return std::all_of(c_.begin(), c_.end(), [](Elem e) { return e.v == 0; });
}

Elem TernaryForm::eval(Elem x, Elem y, Elem z) const
{
    const Field &F = *field_;
    const unsigned d = degree_;
    Elem xp[16], yp[16], zp[16];
    xp[0] = yp[0] = zp[0] = F.one();
    for (unsigned i = 1; i <= d; ++i) {
        xp[i] = F.mul(xp[i - 1], x);
        yp[i] = F.mul(yp[i - 1], y);
        zp[i] = F.mul(zp[i - 1], z);
    }
    Elem r{};
    for (unsigned i = 0; i <= d; ++i)
        for (unsigned j = 0; i + j <= d; ++j) {
            const Elem c = coeff(i, j);
            if (c.v == 0)
                continue;
            r = F.add(r, F.mul(c, F.mul(xp[i], F.mul(yp[j], zp[d - i - j]))));
        }
    return r;
}

TernaryForm TernaryForm::partial(unsigned var) const
{
    if (degree_ == 0)
        return TernaryForm(field_, 0);
    const Field &F = *field_;
    TernaryForm out(field_, degree_ - 1);
    for (unsigned i = 0; i <= degree_; ++i)
        for (unsigned j = 0; i + j <= degree_; ++j) {
            const unsigned k = degree_ - i - j;
            const Elem c = coeff(i, j);
            if (c.v == 0)
                continue;
            if (var == 0 && i > 0)
                out.set(i - 1, j, F.add(out.coeff(i - 1, j), F.mul(F.from_int(i), c)));
            else if (var == 1 && j > 0)
                out.set(i, j - 1, F.add(out.coeff(i, j - 1), F.mul(F.from_int(j), c)));
            else if (var == 2 && k > 0)
                out.set(i, j, F.add(out.coeff(i, j), F.mul(F.from_int(k), c)));
        }
    return out;
}

TernaryForm TernaryForm::operator*(const TernaryForm &rhs) const
{
    if (field_ != rhs.field_)
        throw Error(Errc::FieldMismatch, "forms over different fields");
    const Field &F = *field_;
    TernaryForm out(field_, degree_ + rhs.degree_);
    for (unsigned i = 0; i <= degree_; ++i)
        for (unsigned j = 0; i + j <= degree_; ++j) {
            const Elem a = coeff(i, j);
            if (a.v == 0)
                continue;
            for (unsigned i2 = 0; i2 <= rhs.degree_; ++i2)
                for (unsigned j2 = 0; i2 + j2 <= rhs.degree_; ++j2) {
                    const Elem b = rhs.coeff(i2, j2);
                    if (b.v == 0)
                        continue;
                    out.set(i + i2, j + j2, F.add(out.coeff(i + i2, j + j2), F.mul(a, b)));
                }
        }
    return out;
}

TernaryForm TernaryForm::operator+(const TernaryForm &rhs) const
{
    if (field_ != rhs.field_ || degree_ != rhs.degree_)
        throw Error(Errc::InvalidInput, "adding forms of different degree or field");
    TernaryForm out = *this;
    for (std::size_t i = 0; i < c_.size(); ++i)
        out.c_[i] = field_->add(c_[i], rhs.c_[i]);
    return out;
}

TernaryForm TernaryForm::scaled(Elem s) const
{
    TernaryForm out = *this;
    for (auto &e : out.c_)
        e = field_->mul(e, s);
    return out;
}

bool TernaryForm::proportional_to(const TernaryForm &other, Elem *scale) const
{
    if (degree_ != other.degree_ || field_ != other.field_)
        return false;
    const Field &F = *field_;
    std::size_t pivot = c_.size();
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (other.c_[i].v != 0) {
            pivot = i;
            break;
        }
    if (pivot == c_.size())
        return false;
    const Elem s = F.div(c_[pivot], other.c_[pivot]);
    if (s.v == 0)
        return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != F.mul(s, other.c_[i]))
            return false;
    if (scale)
        *scale = s;
    return true;
}

TernaryForm TernaryForm::transform(const Matrix &m) const
{
    if (m.rows() != 3 || m.cols() != 3)
        throw Error(Errc::InvalidInput, "ternary transform needs a 3x3 matrix");
    const Field &F = *field_;
    TernaryForm lin[3];
    for (unsigned r = 0; r < 3; ++r) {
        lin[r] = TernaryForm(field_, 1);
        lin[r].set(1, 0, m(r, 0));
        lin[r].set(0, 1, m(r, 1));
        lin[r].set(0, 0, m(r, 2));
    }
    std::vector<TernaryForm> pw[3];
    for (unsigned r = 0; r < 3; ++r) {
        TernaryForm one(field_, 0);
        one.set(0, 0, F.one());
        pw[r].push_back(one);
        for (unsigned e = 1; e <= degree_; ++e)
            pw[r].push_back(pw[r].back() * lin[r]);
    }
    TernaryForm out(field_, degree_);
    for (unsigned i = 0; i <= degree_; ++i)
        for (unsigned j = 0; i + j <= degree_; ++j) {
            const Elem c = coeff(i, j);
            if (c.v == 0)
                continue;
            out = out + (pw[0][i] * pw[1][j] * pw[2][degree_ - i - j]).scaled(c);
        }
    return out;
}

BinaryForm TernaryForm::restrict_to_line(const P2Vec &a, const P2Vec &b) const
{
    const Field &F = *field_;
    std::vector<std::vector<Elem>> pw[3];
    for (unsigned r = 0; r < 3; ++r) {
        // a_r s + b_r t, indexed by power of s.
        const std::vector<Elem> lin{b[r], a[r]};
        pw[r].push_back({F.one()});
        for (unsigned e = 1; e <= degree_; ++e)
            pw[r].push_back(convolve(F, pw[r].back(), lin));
    }
    std::vector<Elem> out(degree_ + 1);
    for (unsigned i = 0; i <= degree_; ++i)
        for (unsigned j = 0; i + j <= degree_; ++j) {
            const Elem c = coeff(i, j);
            if (c.v == 0)
                continue;
            const auto term = convolve(F, convolve(F, pw[0][i], pw[1][j]), pw[2][degree_ - i - j]);
            for (unsigned e = 0; e <= degree_; ++e)
                out[e] = F.add(out[e], F.mul(c, term[e]));
        }
    return BinaryForm(field_, degree_, std::move(out));
}

UniPoly TernaryForm::restrict_x(Elem y0, Elem z0) const
{
    const Field &F = *field_;
    const unsigned d = degree_;
    Elem yp[16], zp[16];
    yp[0] = zp[0] = F.one();
    for (unsigned i = 1; i <= d; ++i) {
        yp[i] = F.mul(yp[i - 1], y0);
        zp[i] = F.mul(zp[i - 1], z0);
    }
    std::vector<Elem> out(d + 1);
    for (unsigned i = 0; i <= d; ++i) {
        Elem s{};
        for (unsigned j = 0; i + j <= d; ++j) {
            const Elem c = coeff(i, j);
            if (c.v != 0)
                s = F.add(s, F.mul(c, F.mul(yp[j], zp[d - i - j])));
        }
        out[i] = s;
    }
    return UniPoly(field_, std::move(out));
}

TernaryForm TernaryForm::base_change(const Extension &ext) const
{
    if (ext.base() != field_)
        throw Error(Errc::FieldMismatch, "extension does not start at the form's field");
    TernaryForm out(ext.target(), degree_);
    for (std::size_t i = 0; i < c_.size(); ++i)
        out.c_[i] = ext.map(c_[i]);
    return out;
}

EvenDecomposition decompose_even(const TernaryForm &f)
{
    if (f.degree() != 4)
        throw Error(Errc::WrongDegree, "decompose_even expects a quartic");
    for (unsigned i = 1; i <= 4; i += 2)
        for (unsigned j = 0; i + j <= 4; ++j)
            if (f.coeff(i, j).v != 0)
                throw Error(Errc::NotInvariant, "monomial of odd x-degree present");
    EvenDecomposition d{f.coeff(4, 0), BinaryForm(f.field(), 2), BinaryForm(f.field(), 4)};
    std::vector<Elem> q2(3), q4(5);
    for (unsigned j = 0; j <= 2; ++j)
        q2[j] = f.coeff(2, j);
    for (unsigned j = 0; j <= 4; ++j)
        q4[j] = f.coeff(0, j);
    d.q2 = BinaryForm(f.field(), 2, std::move(q2));
    d.q4 = BinaryForm(f.field(), 4, std::move(q4));
    return d;
}

TernaryForm recompose_even(const EvenDecomposition &d)
{
    TernaryForm out(d.q4.field(), 4);
    out.set(4, 0, d.c);
    for (unsigned j = 0; j <= 2; ++j)
        out.set(2, j, d.q2.coeff(j));
    for (unsigned j = 0; j <= 4; ++j)
        out.set(0, j, d.q4.coeff(j));
    return out;
}

} // namespace richelot
