#include <zfac/pipeline.hpp>

#include <algorithm>
#include <optional>

#include <zfac/errors.hpp>

namespace zfac {

namespace {

// Returns some x with q(x) != 0, for a nonzero q.
Rational nonvanishing_point(const UniPoly &q)
{
    for (long k = 0;; ++k)
        if (!q.eval(Rational(k)).is_zero())
            return Rational(k);
}

// Sturm chain of gcd(rp, rg), built on first use; empty when the gcd is
// constant.
class CommonRoots {
public:
    CommonRoots(const UniPoly &rp, const UniPoly &rg) : rp_(rp), rg_(rg) {}

    const std::optional<SturmChain> &chain()
    {
        if (!built_) {
            built_ = true;
            const UniPoly d = uni_gcd(rp_, rg_);
            if (d.degree() > 0)
                chain_.emplace(d);
        }
        return chain_;
    }

private:
    const UniPoly &rp_;
    const UniPoly &rg_;
    bool built_ = false;
    std::optional<SturmChain> chain_;
};

// Zeros of ra (a restricted to y = y0) checked against rb.
void check_line(const UniPoly &ra, const UniPoly &rb, CommonRoots &common,
                ZeroSetMismatch::Vanishing which, const Rational &y0, ZeroSetSample &out)
{
    if (ra.is_zero()) {
        // The whole line lies in Z(a).
        ++out.points_checked;
        if (!rb.is_zero()) {
            const Rational x0 = nonvanishing_point(rb);
            out.mismatches.push_back({which, y0, {x0, x0}, rb.eval(x0)});
        }
        return;
    }
    for (const auto &iv : isolate_roots(ra)) {
        ++out.points_checked;
        if (iv.exact()) {
            const Rational v = rb.eval(iv.lo);
            if (!v.is_zero())
                out.mismatches.push_back({which, y0, iv, v});
            continue;
        }
        // b vanishes at the isolated root iff the gcd keeps a root in there.
        if (rb.is_zero())
            continue;
        const auto &chain = common.chain();
        if (!chain || chain->count(iv.lo, iv.hi) == 0)
            out.mismatches.push_back({which, y0, iv, std::nullopt});
    }
}

} // namespace

ZeroSetSample verify_same_zero_set_sampled(const BiPoly &p, const BiPoly &g,
                                           const SamplerConfig &cfg)
{
    ZeroSetSample out;
    for (const auto &y0 : cfg.evenly_spaced()) {
        ++out.lines_sampled;
        const UniPoly rp = p.at_y(y0), rg = g.at_y(y0);
        CommonRoots common(rp, rg);
        check_line(rp, rg, common, ZeroSetMismatch::Vanishing::P, y0, out);
        check_line(rg, rp, common, ZeroSetMismatch::Vanishing::G, y0, out);
    }
    return out;
}

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::CommonFactorFound:
        return "CommonFactorFound";
    case Verdict::NoCommonFactor:
        return "NoCommonFactor";
    case Verdict::HypothesisNotEvidenced:
        return "HypothesisNotEvidenced";
    }
    return "?";
}

FactorReport common_factor_check(const BiPoly &p, const BiPoly &g, Direction direction,
                                 const SamplerConfig &cfg, const PipelineOptions &opts)
{
    if (p.is_constant() || g.is_constant())
        throw UsageError("common_factor_check needs nonconstant inputs");
    cfg.validate();
    direction = Direction::normalized(direction.a, direction.b);

    FactorReport rep;
    rep.direction_used = direction;
    const bool horizontal = direction.is_horizontal();
    rep.frame_p = horizontal ? p : change_of_variables(p, direction);
    rep.frame_g = horizontal ? g : change_of_variables(g, direction);
    auto to_original = [&](const BiPoly &f) {
        return horizontal ? f : inverse_change_of_variables(f, direction);
    };

    rep.division = divide_in_x(rep.frame_g, rep.frame_p);
    rep.cleared = clear_denominators(rep.frame_g, rep.frame_p, rep.division);
    rep.remainder_is_zero = rep.cleared.r_tilde.is_zero();

    const BiPoly frame_gcd = bipoly_gcd(rep.frame_p, rep.frame_g);
    rep.gcd = normalized(to_original(frame_gcd));
    if (!frame_gcd.is_constant()) {
        rep.common_factor = normalized(to_original(squarefree_part(frame_gcd)));
        const UniPoly content = content_primitive_x(frame_gcd).content;
        if (content.degree() > 0)
            rep.y_only_factor = content;
        ZFAC_ENSURE(!rep.common_factor->is_constant(), "common factor is nonconstant");
        ZFAC_ENSURE(divide_exact(p, *rep.common_factor).has_value(), "common factor divides p");
        ZFAC_ENSURE(divide_exact(g, *rep.common_factor).has_value(), "common factor divides g");
    }

    rep.threshold = static_cast<std::size_t>(std::max(rep.frame_p.deg_x(), 0));
    rep.witness_p = find_witness_lines(p, rep.threshold, direction, cfg);
    rep.witness_g = find_witness_lines(g, rep.threshold, direction, cfg);
    rep.zero_set_sample = verify_same_zero_set_sampled(p, g, cfg);

    const bool evidenced = rep.witness_p.witnesses.size() >= opts.min_witnesses &&
                           rep.witness_g.witnesses.size() >= opts.min_witnesses;
    const bool zero_sets_look_equal =
        rep.zero_set_sample.points_checked > 0 && rep.zero_set_sample.mismatches.empty();
    if (rep.common_factor)
        rep.verdict = Verdict::CommonFactorFound;
    else if (!rep.remainder_is_zero && !evidenced && zero_sets_look_equal)
        rep.verdict = Verdict::HypothesisNotEvidenced;
    else
        rep.verdict = Verdict::NoCommonFactor;
    return rep;
}

} // namespace zfac
