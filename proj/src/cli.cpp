#include "richelot/cli.hpp"

#include "richelot/error.hpp"
#include "richelot/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <random>
#include <sstream>

namespace richelot::cli {

namespace {

int exit_code(const Error &e)
{
    switch (e.code()) {
    case Errc::CertificateFailed:
        return 2;
    case Errc::BudgetExceeded:
        return 3;
    default:
        return 1;
    }
}

CurveModel load_curve(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::InvalidInput, "cannot read " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw Error(Errc::InvalidInput, path + ": " + e.what());
    }
    return curve_from_json(j);
}

std::vector<std::int64_t> parse_ints(std::string text)
{
    for (char &ch : text)
        if (ch == '[' || ch == ']' || ch == ',')
            ch = ' ';
    std::istringstream in(text);
    std::vector<std::int64_t> out;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != tok.size())
            throw Error(Errc::InvalidInput, "bad coefficient \"" + tok + "\"");
        out.push_back(v);
    }
    return out;
}

// Uniform draw below n by rejecting the top partial block of 2^64.
std::uint64_t uniform_below(std::mt19937_64 &eng, std::uint64_t n)
{
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
        const std::uint64_t r = eng();
        if (r < limit)
            return r % n;
    }
}

void require_genus3(const CurveModel &c)
{
    if (!std::holds_alternative<HyperellipticG3>(c) && !std::holds_alternative<PlaneQuartic>(c))
        throw Error(Errc::InvalidInput, "this command needs a genus-3 hyperelliptic curve or a plane quartic");
}

Json counts_json(const std::vector<std::int64_t> &counts)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < counts.size(); ++i)
        out.push_back(Json::array({i + 1, counts[i]}));
    return out;
}

Json with_provenance(const CurveModel &c, Json provenance)
{
    Json j = to_json(c);
    j["provenance"] = std::move(provenance);
    return j;
}

struct Options {
    unsigned threads = 1;
    bool pretty = false;
    std::string file;
    unsigned n = 1;
    unsigned extend = 1;
    std::uint32_t p = 0;
    unsigned k = 1;
    std::string f1, f2;
    std::string model = "hyperelliptic";
    std::uint64_t samples = 10;
    std::uint64_t seed = 0;
};

Json cmd_validate(const Options &o)
{
    const auto c = load_curve(o.file);
    Json out{{"valid", true}, {"model", model_name(c)}, {"field", to_json(field_of(c))}, {"genus", genus(c)}};
    if (const auto *h = std::get_if<HoweSystem>(&c))
        out["r"] = h->r;
    return out;
}

Json cmd_count(const Options &o)
{
    const auto c = load_curve(o.file);
    const auto counts = point_counts(c, o.n);
    const auto q = field_of(c)->order();
    Json out{{"counts", counts_json(counts)}, {"q", q}};
    out["L"] = static_cast<int>(o.n) >= genus(c) ? Json(l_polynomial_from_counts(q, genus(c), counts).c) : Json();
    return out;
}

Json cmd_lpoly(const Options &o)
{
    const auto c = load_curve(o.file);
    const auto L = l_polynomial(c);
    const auto q = field_of(c)->order();
    std::vector<std::int64_t> counts;
    for (int n = 1; n <= genus(c); ++n)
        counts.push_back(L.predicted_count(static_cast<unsigned>(n)));
    return Json{{"counts", counts_json(counts)}, {"L", L.c}, {"q", q}, {"genus", L.genus}};
}

Json cmd_involutions(const Options &o)
{
    CurveModel c = load_curve(o.file);
    if (o.extend > 1)
        c = base_change(c, Extension::of(field_of(c), o.extend));
    require_genus3(c);
    const auto *q = std::get_if<PlaneQuartic>(&c);
    Json records = Json::array(), order_four = Json::array();
    if (q) {
        for (const auto &m : find_quartic_involutions(*q))
            records.push_back(to_json(quartic_record(*q, m)));
    } else {
        const auto &h = std::get<HyperellipticG3>(c);
        const auto found = find_branch_involutions(h);
        for (const auto &m : found.good) {
            const auto [s, t] = lift_involutions(h, m);
            records.push_back(to_json(s));
            records.push_back(to_json(t));
        }
        for (const auto &m : found.order_four)
            order_four.push_back(to_json(m));
    }
    Json out{{"field", to_json(field_of(c))}, {"involutions", std::move(records)}};
    if (!q)
        out["order_four"] = std::move(order_four);
    return out;
}

Json cmd_quotients(const Options &o)
{
    const auto c = load_curve(o.file);
    Json list = Json::array();
    if (const auto *hw = std::get_if<HoweSystem>(&c)) {
        const auto q = howe_quotients(*hw);
        const char *names[] = {"f1", "f2", "f1*f2/gcd^2"};
        const Genus1Model *es[] = {&q.e1, &q.e2, &q.e3};
        for (int i = 0; i < 3; ++i)
            list.push_back(with_provenance(*es[i], Json{{"howe_factor", names[i]}}));
        return Json{{"quotients", std::move(list)}};
    }
    require_genus3(c);
    if (const auto *q = std::get_if<PlaneQuartic>(&c)) {
        for (const auto &m : find_quartic_involutions(*q)) {
            const auto n = normalize_quartic(*q, m);
            list.push_back(with_provenance(elliptic_quotient_quartic(n),
                                           Json{{"involution", to_json(m)}, {"extended", n.extended}}));
        }
    } else {
        const auto &h = std::get<HyperellipticG3>(c);
        for (const auto &m : find_branch_involutions(h).good) {
            const auto n = normalize_hyperelliptic(h, m);
            list.push_back(with_provenance(elliptic_quotient_hyp(n), Json{{"involution", to_json(m)},
                                                                          {"lift", "sigma"},
                                                                          {"extended", n.extended}}));
            list.push_back(with_provenance(genus2_quotient_hyp(n), Json{{"involution", to_json(m)},
                                                                        {"lift", "tau"},
                                                                        {"extended", n.extended}}));
        }
    }
    return Json{{"quotients", std::move(list)}};
}

Json cmd_decompose(const Options &o, int &code)
{
    const auto c = load_curve(o.file);
    const auto report = analyze(c);
    const auto check = verify_certificate(report);
    code = check.ok ? 0 : 2;
    return to_json(report, check);
}

Json cmd_howe(const Options &o)
{
    if (o.p == 0)
        throw Error(Errc::InvalidInput, "howe build needs --p");
    const auto F = Field::build(o.p, o.k);
    const auto h = make_howe(UniPoly::from_ints(F, parse_ints(o.f1)), UniPoly::from_ints(F, parse_ints(o.f2)));
    Json out{{"curve", to_json(CurveModel(h))},
             {"r", h.r},
             {"genus", h.genus()},
             {"branch_count", howe_branch_count(h)}};
    if (h.r == 2) {
        const auto q = howe_quotients(h);
        out["quotients"] = Json::array({to_json(CurveModel(q.e1)), to_json(CurveModel(q.e2)), to_json(CurveModel(q.e3))});
    } else {
        out["quotients"] = nullptr;
    }
    return out;
}

Json cmd_census(const Options &o)
{
    if (o.p == 0)
        throw Error(Errc::InvalidInput, "census needs --p");
    if (o.model != "hyperelliptic" && o.model != "quartic")
        throw Error(Errc::InvalidInput, "census --model must be hyperelliptic or quartic");
    const auto F = Field::build(o.p, o.k);
    std::mt19937_64 eng(o.seed);
    auto draw = [&] { return Elem{static_cast<std::uint32_t>(uniform_below(eng, F->order()))}; };
    std::uint64_t rejections = 0, with_long = 0, hyp = 0, quart = 0, complete = 0;
    for (std::uint64_t s = 0; s < o.samples; ++s) {
        CurveModel c;
        for (;;) {
            if (o.model == "hyperelliptic") {
                std::vector<Elem> coeffs(9);
                for (auto &e : coeffs)
                    e = draw();
                const BinaryForm f(F, 8, coeffs);
                if (!f.is_zero() && f.squarefree()) {
                    c = make_hyperelliptic(f);
                    break;
                }
            } else {
                TernaryForm f(F, 4);
                for (unsigned i = 0; i <= 4; ++i)
                    for (unsigned j = 0; i + j <= 4; ++j)
                        f.set(i, j, draw());
                if (!f.is_zero() && quartic_is_smooth(f)) {
                    c = make_quartic(f);
                    break;
                }
            }
            ++rejections;
        }
        const auto r = analyze(c);
        with_long += !r.hyp_splits.empty() || !r.quartic_splits.empty();
        hyp += !r.hyp_splits.empty();
        quart += !r.quartic_splits.empty();
        complete += r.complete.has_value();
    }
    return Json{{"p", o.p},
                {"k", o.k},
                {"model", o.model},
                {"seed", o.seed},
                {"sampled", o.samples},
                {"rejections", rejections},
                {"with_long_involution", with_long},
                {"hyp_split", hyp},
                {"quartic_split", quart},
                {"complete", complete}};
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Richelot isogeny decomposition of genus-3 curves over finite fields", "richelot"};
    app.require_subcommand(1);
    app.add_option("--threads", o.threads, "Worker threads for point counting")->check(CLI::Range(1u, 256u));
    app.add_flag("--pretty", o.pretty, "Indent the JSON output");

    auto with_file = [&](const char *name, const char *help) {
        auto *sub = app.add_subcommand(name, help);
        sub->fallthrough();
        sub->add_option("file", o.file, "Curve file (JSON)")->required();
        return sub;
    };
    auto *validate = with_file("validate", "Check a curve file");
    auto *count = with_file("count", "Point counts N_1..N_n");
    count->add_option("--n", o.n, "Largest extension degree")->check(CLI::Range(1u, 24u));
    auto *lpoly = with_file("lpoly", "L-polynomial");
    auto *involutions = with_file("involutions", "Involutions and their lifts");
    involutions->add_option("--extend", o.extend, "Search over F_{q^k}")->check(CLI::Range(1u, 6u));
    auto *quotients = with_file("quotients", "Quotient curves by the long involutions");
    auto *decompose = with_file("decompose", "Decomposition report with certificates");

    auto *howe = app.add_subcommand("howe", "Howe curves");
    howe->require_subcommand(1);
    auto *build = howe->add_subcommand("build", "Build y^2 = f1, z^2 = f2");
    build->fallthrough();
    howe->fallthrough();
    build->add_option("--f1", o.f1, "Ascending coefficients, comma separated")->required();
    build->add_option("--f2", o.f2, "Ascending coefficients, comma separated")->required();
    build->add_option("--p", o.p, "Characteristic")->required();
    build->add_option("--k", o.k, "Extension degree");

    auto *census = app.add_subcommand("census", "Decompose random curves");
    census->fallthrough();
    census->add_option("--p", o.p, "Characteristic")->required();
    census->add_option("--k", o.k, "Extension degree");
    census->add_option("--model", o.model, "hyperelliptic or quartic");
    census->add_option("--samples", o.samples, "Number of curves");
    census->add_option("--seed", o.seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    set_default_threads(o.threads);
    int code = 0;
    try {
        Json result;
        if (*validate)
            result = cmd_validate(o);
        else if (*count)
            result = cmd_count(o);
        else if (*lpoly)
            result = cmd_lpoly(o);
        else if (*involutions)
            result = cmd_involutions(o);
        else if (*quotients)
            result = cmd_quotients(o);
        else if (*decompose)
            result = cmd_decompose(o, code);
        else if (*build)
            result = cmd_howe(o);
        else
            result = cmd_census(o);
        out << (o.pretty ? result.dump(2) : result.dump()) << '\n';
    } catch (const Error &e) {
        err << e.what() << '\n';
        return exit_code(e);
    } catch (const std::exception &e) {
        err << e.what() << '\n';
        return 1;
    }
    return code;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    std::vector<const char *> argv{"richelot"};
    for (const auto &a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace richelot::cli
