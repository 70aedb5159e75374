#include "richelot/decomposition.hpp"

#include "richelot/error.hpp"

#include <algorithm>

namespace richelot {

namespace {

LPolynomial over(const LPolynomial &l, std::uint64_t q)
{
    if (l.q == q)
        return l;
    if (l.q * l.q == q)
        return l.over_quadratic_extension();
    throw Error(Errc::FieldMismatch, "L-polynomials over unrelated fields");
}

std::uint64_t common_order(std::initializer_list<std::uint64_t> qs)
{
    std::uint64_t q = 0;
    for (auto x : qs)
        q = std::max(q, x);
    return q;
}

void require_equal(const LPolynomial &lhs, const LPolynomial &rhs, const char *what)
{
    if (!(lhs == rhs))
        throw Error(Errc::CertificateFailed, std::string(what) + ": " + lhs.to_string() + " != " + rhs.to_string());
}

Genus1Model elliptic_quotient(const CurveModel &c, const InvolutionRecord &r)
{
    if (r.model == InvolutionRecord::Model::Hyperelliptic)
        return elliptic_quotient_hyp(normalize_hyperelliptic(std::get<HyperellipticG3>(c), r.matrix));
    return elliptic_quotient_quartic(normalize_quartic(std::get<PlaneQuartic>(c), r.matrix));
}

CompleteSplit complete_split(const CurveModel &c, const LPolynomial &lc, const InvolutionRecord &s,
                             const InvolutionRecord &t, unsigned threads)
{
    CompleteSplit out{s, t, product_record(c, s, t), {}, {}, {}};
    if (!out.sigma.is_long || !out.tau.is_long || !out.product.is_long)
        throw Error(Errc::CertificateFailed, "product of a commuting long pair is not long");
    const InvolutionRecord *recs[3] = {&out.sigma, &out.tau, &out.product};
    for (int i = 0; i < 3; ++i) {
        out.e[i] = elliptic_quotient(c, *recs[i]);
        out.l_e[i] = l_polynomial(out.e[i], threads);
    }
    const std::uint64_t q = common_order({lc.q, out.l_e[0].q, out.l_e[1].q, out.l_e[2].q});
    for (auto &l : out.l_e)
        l = over(l, q);
    out.l_c = over(lc, q);
    require_equal(out.l_c, out.l_e[0] * out.l_e[1] * out.l_e[2], "COMPLETE");
    return out;
}

} // namespace

std::vector<std::string> DecompositionReport::kinds() const
{
    std::vector<std::string> out;
    if (!hyp_splits.empty())
        out.push_back("HYP_SPLIT");
    if (!quartic_splits.empty())
        out.push_back("QUARTIC_SPLIT");
    if (complete)
        out.push_back("COMPLETE");
    if (out.empty())
        out.push_back("NONE");
    return out;
}

std::optional<std::pair<InvolutionRecord, InvolutionRecord>> detect_howe(const std::vector<InvolutionRecord> &records)
{
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (!records[i].is_long)
            continue;
        for (std::size_t j = i + 1; j < records.size(); ++j)
            if (records[j].is_long && !records[i].matrix.proportional_to(records[j].matrix) &&
                commute(records[i], records[j]))
                return std::pair{records[i], records[j]};
    }
    return std::nullopt;
}

DecompositionReport analyze(const CurveModel &c, unsigned threads)
{
    DecompositionReport r;
    r.curve = c;
    if (const auto *h = std::get_if<HyperellipticG3>(&c)) {
        const auto found = find_branch_involutions(*h);
        r.order_four = found.order_four;
        for (const auto &m : found.good) {
            auto [sigma, tau] = lift_involutions(*h, m);
            r.involutions.push_back(sigma);
            r.involutions.push_back(tau);
        }
        for (const auto &rec : r.involutions) {
            if (!rec.is_long)
                continue;
            if (!r.l_c)
                r.l_c = l_polynomial(c, threads);
            HypSplit s{rec, normalize_hyperelliptic(*h, rec.matrix), {}, {}, {}, {}, {}};
            s.e = elliptic_quotient_hyp(s.normal);
            s.c_tau = genus2_quotient_hyp(s.normal);
            s.l_e = l_polynomial(s.e, threads);
            s.l_g2 = l_polynomial(s.c_tau, threads);
            s.l_c = over(*r.l_c, s.l_e.q);
            require_equal(s.l_c, s.l_e * s.l_g2, "HYP_SPLIT");
            r.hyp_splits.push_back(std::move(s));
        }
    } else if (const auto *q = std::get_if<PlaneQuartic>(&c)) {
        for (const auto &m : find_quartic_involutions(*q))
            r.involutions.push_back(quartic_record(*q, m));
        for (const auto &rec : r.involutions) {
            if (!rec.is_long)
                continue;
            if (!r.l_c)
                r.l_c = l_polynomial(c, threads);
            QuarticSplit s{rec, normalize_quartic(*q, rec.matrix), {}, {}, {}, {}, 3};
            s.e = elliptic_quotient_quartic(s.normal);
            s.l_e = l_polynomial(s.e, threads);
            s.l_c = over(*r.l_c, s.l_e.q);
            try {
                s.l_a = l_divide(s.l_c, s.l_e);
            } catch (const Error &e) {
                throw Error(Errc::CertificateFailed, std::string("QUARTIC_SPLIT: ") + e.what());
            }
            r.quartic_splits.push_back(std::move(s));
        }
    } else {
        throw Error(Errc::InvalidInput, "decomposition needs a genus-3 hyperelliptic curve or a plane quartic");
    }
    if (const auto pair = detect_howe(r.involutions))
        r.complete = complete_split(c, *r.l_c, pair->first, pair->second, threads);
    r.consistent = true;
    return r;
}

CertificateCheck verify_certificate(const DecompositionReport &r, unsigned threads)
{
    CertificateCheck out;
    auto fail = [&](const std::string &kind, const LPolynomial &lhs, const LPolynomial &rhs) {
        out.ok = false;
        out.failures.push_back(kind + ": " + lhs.to_string() + " != " + rhs.to_string());
    };
    if (!r.l_c) {
        if (!r.hyp_splits.empty() || !r.quartic_splits.empty() || r.complete) {
            out.ok = false;
            out.failures.push_back("L_C: missing");
        }
        return out;
    }
    const LPolynomial lc = l_polynomial(r.curve, threads);
    if (!(lc == *r.l_c))
        fail("L_C", lc, *r.l_c);
    try {
        for (const auto &s : r.hyp_splits) {
            const auto le = l_polynomial(s.e, threads), lg = l_polynomial(s.c_tau, threads);
            const std::uint64_t q = common_order({le.q, lg.q, lc.q});
            if (!(over(lc, q) == over(le, q) * over(lg, q)))
                fail("HYP_SPLIT", over(lc, q), over(le, q) * over(lg, q));
        }
        for (const auto &s : r.quartic_splits) {
            const auto le = l_polynomial(s.e, threads);
            const std::uint64_t q = common_order({le.q, lc.q});
            try {
                const auto la = l_divide(over(lc, q), over(le, q));
                if (la.genus != 2 || !(la == s.l_a))
                    fail("QUARTIC_SPLIT", la, s.l_a);
            } catch (const Error &) {
                fail("QUARTIC_SPLIT", over(lc, q), over(le, q));
            }
        }
        if (r.complete) {
            const auto &s = *r.complete;
            if (!s.sigma.is_long || !s.tau.is_long || !s.product.is_long || !commute(s.sigma, s.tau)) {
                out.ok = false;
                out.failures.push_back("COMPLETE: the pair is not a commuting long pair");
            }
            std::array<LPolynomial, 3> le;
            std::uint64_t q = lc.q;
            for (int i = 0; i < 3; ++i) {
                le[i] = l_polynomial(s.e[i], threads);
                q = std::max(q, le[i].q);
            }
            const auto rhs = over(le[0], q) * over(le[1], q) * over(le[2], q);
            if (!(over(lc, q) == rhs))
                fail("COMPLETE", over(lc, q), rhs);
        }
    } catch (const Error &e) {
        out.ok = false;
        out.failures.push_back(e.what());
    }
    return out;
}

} // namespace richelot
