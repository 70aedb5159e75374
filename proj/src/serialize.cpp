#include "richelot/serialize.hpp"

#include "richelot/error.hpp"

#include <charconv>

namespace richelot {

namespace {

[[noreturn]] void bad(const std::string &what) { throw Error(Errc::InvalidInput, what); }

std::vector<unsigned> exponents(const std::string &key, std::size_t arity)
{
    std::vector<unsigned> out;
    const char *p = key.data(), *end = key.data() + key.size();
    while (p < end) {
        unsigned v = 0;
        const auto [next, ec] = std::from_chars(p, end, v);
        if (ec != std::errc())
            bad("bad exponent key \"" + key + "\"");
        out.push_back(v);
        p = next;
        if (p < end && *p++ != ',')
            bad("bad exponent key \"" + key + "\"");
    }
    if (out.size() != arity)
        bad("exponent key \"" + key + "\" needs " + std::to_string(arity) + " entries");
    return out;
}

std::int64_t integer(const Json &j, const char *what)
{
    if (!j.is_number_integer())
        bad(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

const Json &member(const Json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key))
        bad(std::string("missing \"") + key + "\"");
    return j.at(key);
}

Json record_matrix(const InvolutionRecord &r) { return to_json(r.matrix); }

Json normalization_json(const Matrix &m, bool extended)
{
    return Json{{"field", to_json(m.field())}, {"matrix", to_json(m)}, {"extended", extended}};
}

} // namespace

Json to_json(const FieldPtr &field) { return Json{{"p", field->characteristic()}, {"k", field->degree()}}; }

FieldPtr field_from_json(const Json &j)
{
    const auto p = integer(member(j, "p"), "p");
    const auto k = j.contains("k") ? integer(j.at("k"), "k") : 1;
    if (p < 2 || p > 0xffffffffLL || k < 1 || k > 64)
        bad("field parameters out of range");
    return Field::build(static_cast<std::uint32_t>(p), static_cast<unsigned>(k));
}

Json to_json(const Field &F, Elem a)
{
    if (F.degree() == 1)
        return a.v;
    return F.coeffs(a);
}

Elem elem_from_json(const Field &F, const Json &j)
{
    if (j.is_number_integer())
        return F.from_int(j.get<std::int64_t>());
    if (!j.is_array() || j.size() > F.degree())
        bad("field element must be an integer or at most " + std::to_string(F.degree()) + " coefficients");
    std::vector<std::uint32_t> c(F.degree(), 0);
    const auto p = static_cast<std::int64_t>(F.characteristic());
    for (std::size_t i = 0; i < j.size(); ++i)
        c[i] = static_cast<std::uint32_t>(((integer(j[i], "coefficient") % p) + p) % p);
    return F.from_coeffs(c);
}

Json to_json(const UniPoly &f)
{
    Json out = Json::array();
    for (const Elem e : f.coeffs())
        out.push_back(to_json(*f.field(), e));
    return out;
}

UniPoly poly_from_json(const FieldPtr &F, const Json &j)
{
    if (!j.is_array())
        bad("polynomial must be a coefficient array");
    std::vector<Elem> c;
    for (const auto &e : j)
        c.push_back(elem_from_json(*F, e));
    return UniPoly(F, std::move(c));
}

Json to_json(const BinaryForm &f)
{
    Json out = Json::object();
    for (unsigned i = f.degree() + 1; i-- > 0;)
        if (f.coeff(i).v != 0)
            out[std::to_string(i) + "," + std::to_string(f.degree() - i)] = to_json(*f.field(), f.coeff(i));
    return out;
}

BinaryForm binary_form_from_json(const FieldPtr &F, const Json &j)
{
    if (!j.is_object() || j.empty())
        bad("binary form must be a non-empty {\"i,j\": c} map");
    std::optional<unsigned> degree;
    std::vector<std::pair<unsigned, Elem>> terms;
    for (const auto &[key, value] : j.items()) {
        const auto e = exponents(key, 2);
        if (degree && *degree != e[0] + e[1])
            bad("binary form is not homogeneous");
        degree = e[0] + e[1];
        terms.emplace_back(e[0], elem_from_json(*F, value));
    }
    std::vector<Elem> c(*degree + 1, F->zero());
    for (const auto &[i, v] : terms)
        c[i] = F->add(c[i], v);
    return BinaryForm(F, *degree, std::move(c));
}

Json to_json(const TernaryForm &f)
{
    const unsigned d = f.degree();
    Json out = Json::object();
    for (unsigned i = d + 1; i-- > 0;)
        for (unsigned jj = d - i + 1; jj-- > 0;)
            if (f.coeff(i, jj).v != 0)
                out[std::to_string(i) + "," + std::to_string(jj) + "," + std::to_string(d - i - jj)] =
                    to_json(*f.field(), f.coeff(i, jj));
    return out;
}

TernaryForm ternary_form_from_json(const FieldPtr &F, const Json &j)
{
    if (!j.is_object() || j.empty())
        bad("ternary form must be a non-empty {\"i,j,k\": c} map");
    std::optional<unsigned> degree;
    for (const auto &[key, value] : j.items()) {
        const auto e = exponents(key, 3);
        if (degree && *degree != e[0] + e[1] + e[2])
            bad("ternary form is not homogeneous");
        degree = e[0] + e[1] + e[2];
    }
    TernaryForm f(F, *degree);
    for (const auto &[key, value] : j.items()) {
        const auto e = exponents(key, 3);
        f.set(e[0], e[1], F->add(f.coeff(e[0], e[1]), elem_from_json(*F, value)));
    }
    return f;
}

Json to_json(const Matrix &m)
{
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(to_json(*m.field(), m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(const CurveModel &c)
{
    Json out{{"model", model_name(c)}, {"field", to_json(field_of(c))}};
    std::visit(
        [&](const auto &m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, PlaneQuartic>)
                out["f"] = to_json(m.form);
            else if constexpr (std::is_same_v<T, HoweSystem>)
                out["f"] = Json::array({to_json(m.f1), to_json(m.f2)});
            else
                out["f"] = to_json(m.form);
        },
        c);
    return out;
}

CurveModel curve_from_json(const Json &j)
{
    if (!j.is_object())
        bad("curve file must be a JSON object");
    const auto &model = member(j, "model");
    if (!model.is_string())
        bad("\"model\" must be a string");
    const FieldPtr F = field_from_json(member(j, "field"));
    const Json &f = member(j, "f");
    const std::string name = model.get<std::string>();
    if (name == "quartic")
        return make_quartic(ternary_form_from_json(F, f));
    if (name == "howe") {
        if (!f.is_array() || f.size() != 2)
            bad("howe \"f\" must be [f1, f2]");
        return make_howe(poly_from_json(F, f[0]), poly_from_json(F, f[1]));
    }
    auto build = [&](auto make) -> CurveModel {
        if (f.is_array())
            return make(poly_from_json(F, f));
        return make(binary_form_from_json(F, f));
    };
    if (name == "hyperelliptic")
        return build([](const auto &x) { return make_hyperelliptic(x); });
    if (name == "genus1")
        return build([](const auto &x) { return make_genus1(x); });
    if (name == "genus2")
        return build([](const auto &x) { return make_genus2(x); });
    bad("unknown model \"" + name + "\"");
}

Json to_json(const LPolynomial &l) { return Json{{"q", l.q}, {"genus", l.genus}, {"L", l.c}}; }

Json to_json(const InvolutionRecord &r)
{
    Json out{{"model", r.model == InvolutionRecord::Model::Hyperelliptic ? "hyperelliptic" : "quartic"},
             {"matrix", record_matrix(r)}};
    if (r.model == InvolutionRecord::Model::Hyperelliptic) {
        out["mu"] = to_json(*r.matrix.field(), r.mu);
        out["lift_sign"] = r.lift_sign;
    }
    out["eigenvalues"] = r.eigenvalues;
    out["delta"] = r.delta;
    out["quotient_genus"] = r.quotient_genus;
    out["long"] = r.is_long;
    return out;
}

Json to_json(const DecompositionReport &r, const CertificateCheck &check)
{
    Json out{{"schema_version", 1},
             {"curve", to_json(r.curve)},
             {"kinds", r.kinds()},
             {"certificate_status", r.consistent && check.ok ? "consistent" : "failed"}};
    if (!check.ok)
        out["certificate_failures"] = check.failures;
    out["L_C"] = r.l_c ? to_json(*r.l_c) : Json();
    out["involutions"] = Json::array();
    for (const auto &rec : r.involutions)
        out["involutions"].push_back(to_json(rec));
    out["order_four"] = Json::array();
    for (const auto &m : r.order_four)
        out["order_four"].push_back(to_json(m));

    out["hyp_split"] = Json::array();
    for (const auto &s : r.hyp_splits)
        out["hyp_split"].push_back(Json{{"involution", to_json(s.sigma.matrix)},
                                        {"normalization", normalization_json(s.normal.conjugation, s.normal.extended)},
                                        {"E", to_json(CurveModel(s.e))},
                                        {"C_tau", to_json(CurveModel(s.c_tau))},
                                        {"L_C", to_json(s.l_c)},
                                        {"L_E", to_json(s.l_e)},
                                        {"L_G2", to_json(s.l_g2)}});

    out["quartic_split"] = Json::array();
    for (const auto &s : r.quartic_splits) {
        Json norm = normalization_json(s.normal.conjugation, s.normal.extended);
        norm["c"] = to_json(*s.normal.parts.q4.field(), s.normal.parts.c);
        norm["q2"] = to_json(s.normal.parts.q2);
        norm["q4"] = to_json(s.normal.parts.q4);
        out["quartic_split"].push_back(Json{{"involution", to_json(s.sigma.matrix)},
                                            {"normalization", std::move(norm)},
                                            {"E", to_json(CurveModel(s.e))},
                                            {"L_C", to_json(s.l_c)},
                                            {"L_E", to_json(s.l_e)},
                                            {"L_A", to_json(s.l_a)},
                                            {"multiplicity", s.multiplicity}});
    }

    if (r.complete) {
        const auto &s = *r.complete;
        Json es = Json::array(), ls = Json::array();
        for (int i = 0; i < 3; ++i) {
            es.push_back(to_json(CurveModel(s.e[i])));
            ls.push_back(to_json(s.l_e[i]));
        }
        out["complete"] = Json{{"sigma", to_json(s.sigma)},
                               {"tau", to_json(s.tau)},
                               {"product", to_json(s.product)},
                               {"E", std::move(es)},
                               {"L_E", std::move(ls)},
                               {"L_C", to_json(s.l_c)}};
    } else {
        out["complete"] = nullptr;
    }
    return out;
}

} // namespace richelot
