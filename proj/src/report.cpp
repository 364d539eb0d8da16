#include <zfac/report.hpp>

#include <zfac/printer.hpp>

namespace zfac::report {

json degree(int d)
{
    if (d == kNegInfinity)
        return "-inf";
    return d;
}

json rational(const Rational &r)
{
    return r.wire();
}

json interval(const RootInterval &iv)
{
    return {{"lo", rational(iv.lo)}, {"hi", rational(iv.hi)}, {"exact", iv.exact()}};
}

json quaternion(const Quaternion &q)
{
    json parts = json::array();
    for (const auto &c : q.components())
        parts.push_back(rational(c));
    return {{"text", q.str()}, {"components", parts}};
}

json to_json(const DivisionResult &d)
{
    return {{"quotient", print_canonical(d.quotient)},
            {"remainder", print_canonical(d.remainder)},
            {"remainder_deg_x", degree(d.remainder.degree())},
            {"divisor_deg_x", degree(d.divisor_deg_x)}};
}

json to_json(const ClearedDivision &c)
{
    return {{"h", print_canonical(c.h)},
            {"q_tilde", print_canonical(c.q_tilde)},
            {"r_tilde", print_canonical(c.r_tilde)}};
}

json to_json(const WitnessReport &w)
{
    json offsets = json::array(), skipped = json::array(), counts = json::array();
    for (const auto &wl : w.witnesses) {
        offsets.push_back(rational(wl.line.offset));
        counts.push_back(wl.distinct_intersections);
    }
    for (const auto &s : w.skipped_offsets)
        skipped.push_back(rational(s));
    const Rational fraction = w.lines_tested == 0
                                  ? Rational(0)
                                  : Rational(mpz_class(w.witnesses.size()), mpz_class(w.lines_tested));
    return {{"direction", w.direction.str()},
            {"threshold", w.threshold},
            {"lines_tested", w.lines_tested},
            {"witness_count", w.witnesses.size()},
            {"fraction", rational(fraction)},
            {"witness_offsets", offsets},
            {"witness_intersections", counts},
            {"skipped_offsets", skipped}};
}

json to_json(const ParityClass &pc)
{
    json ws = json::array();
    for (const auto &w : pc.witnesses)
        ws.push_back({{"fixed", rational(w.fixed)}, {"interval", interval(w.interval)}});
    return {{"kind", std::string(to_string(pc.kind))}, {"witnesses", ws}};
}

json to_json(const ZeroSetSample &z)
{
    json ms = json::array();
    for (const auto &m : z.mismatches) {
        json j{{"vanishing", m.vanishing == ZeroSetMismatch::Vanishing::P ? "p" : "g"},
               {"y", rational(m.y)},
               {"x", interval(m.x)}};
        j["other_value"] = m.other_value ? rational(*m.other_value) : json(nullptr);
        ms.push_back(std::move(j));
    }
    return {{"lines_sampled", z.lines_sampled}, {"points_checked", z.points_checked}, {"mismatches", ms}};
}

json to_json(const FactorReport &r)
{
    json j{{"direction_used", r.direction_used.str()},
           {"frame_p", print_canonical(r.frame_p)},
           {"frame_g", print_canonical(r.frame_g)},
           {"division", to_json(r.division)},
           {"cleared", to_json(r.cleared)},
           {"remainder_is_zero", r.remainder_is_zero},
           {"gcd", print_canonical(r.gcd)},
           {"threshold", r.threshold},
           {"witness_evidence", {{"p", to_json(r.witness_p)}, {"g", to_json(r.witness_g)}}},
           {"zero_set_sample", to_json(r.zero_set_sample)},
           {"verdict", std::string(to_string(r.verdict))}};
    j["common_factor"] = r.common_factor ? json(print_canonical(*r.common_factor)) : json(nullptr);
    j["y_only_factor"] = r.y_only_factor ? json(print_canonical(*r.y_only_factor)) : json(nullptr);
    return j;
}

json to_json(const LinearSystem &s)
{
    json rows = json::array();
    for (std::size_t r = 0; r < s.rows(); ++r) {
        json row = json::array();
        for (const auto &v : s.matrix[r])
            row.push_back(rational(v));
        rows.push_back({{"coefficients", row}, {"rhs", rational(s.rhs[r])}});
    }
    return {{"columns", s.columns}, {"rows", rows}};
}

json to_json(const LinearVerdict &v)
{
    json j{{"kind", std::string(to_string(v.kind))},
           {"rank", v.rank},
           {"kernel_dimension", v.kernel_dimension}};
    if (v.solution) {
        json sol = json::array();
        for (const auto &s : *v.solution)
            sol.push_back(rational(s));
        j["solution"] = sol;
    } else {
        j["solution"] = nullptr;
    }
    return j;
}

json to_json(const DivisibilityVerdict &v)
{
    json j{{"side", std::string(to_string(v.side))},
           {"row_labels", v.row_labels},
           {"column_labels", v.column_labels}};
    j["quotient"] = v.quotient ? json(print_canonical(*v.quotient)) : json(nullptr);
    if (v.infeasible_system) {
        j["infeasible_system"] = to_json(*v.infeasible_system);
        j["verdict"] = to_json(solve_linear(*v.infeasible_system));
    } else {
        j["infeasible_system"] = nullptr;
    }
    return j;
}

json to_json(const UnsatCertificate &c)
{
    json bs = json::array();
    for (const auto &b : c.branches) {
        json as = json::array(), tr = json::array();
        for (const auto &a : b.assumptions)
            as.push_back(std::string(to_string(a.slot)) + (a.zero ? " = 0" : " != 0"));
        for (const auto &s : b.trace)
            tr.push_back({{"word", s.word}, {"equation", s.equation}, {"decision", s.decision}});
        bs.push_back({{"assumptions", as},
                      {"trace", tr},
                      {"closure", std::string(to_string(b.closure))}});
    }
    return {{"branches", bs}};
}

json to_json(const FactorizationOutcome &o)
{
    if (const auto *c = std::get_if<UnsatCertificate>(&o))
        return {{"outcome", "Irreducible"}, {"certificate", to_json(*c)}};
    if (const auto *f = std::get_if<LinearFactorization>(&o))
        return {{"outcome", "Factorization"},
                {"left", print_canonical(f->left)},
                {"right", print_canonical(f->right)}};
    return {{"outcome", "Inconclusive"}, {"reason", std::get<Inconclusive>(o).reason}};
}

json to_json(const AgreementReport &a)
{
    json ds = json::array();
    for (const auto &d : a.disagreements)
        ds.push_back({{"a", quaternion(d.pair.first)},
                      {"b", quaternion(d.pair.second)},
                      {"commuting", d.commuting},
                      {"f1_value", quaternion(d.f1_value)},
                      {"f2_value", quaternion(d.f2_value)}});
    return {{"anchor_pairs", a.anchor_pairs},
            {"commuting_pairs", a.commuting_pairs},
            {"generic_pairs", a.generic_pairs},
            {"disagreement_count", a.disagreements.size()},
            {"disagreements", ds}};
}

} // namespace zfac::report
