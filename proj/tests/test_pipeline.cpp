#include <doctest.h>

#include <zfac/errors.hpp>
#include <zfac/parser.hpp>
#include <zfac/pipeline.hpp>

#include "support.hpp"

using namespace zfac;
using zfac_test::Gen;

namespace {

BiPoly P(const char *s)
{
    return parse_bipoly(s);
}

} // namespace

TEST_CASE("shared parabola factor")
{
    const auto r = common_factor_check(P("y-x^2"), P("(y-x^2)(x^2+y^2+1)"),
                                       Direction::horizontal(), SamplerConfig{});
    CHECK(r.remainder_is_zero);
    CHECK(r.cleared.r_tilde.is_zero());
    REQUIRE(r.common_factor);
    CHECK(associates(*r.common_factor, P("y-x^2")));
    CHECK(r.threshold == 2);
    CHECK(r.witness_p.witnesses.size() == 100);
    CHECK(r.witness_p.lines_tested == 100);
    CHECK_FALSE(r.y_only_factor);
    CHECK(r.verdict == Verdict::CommonFactorFound);
    CHECK(r.zero_set_sample.mismatches.empty());
}

TEST_CASE("circle and quartic share only the origin")
{
    const auto r = common_factor_check(P("x^2+y^2"), P("x^4+y^4"), Direction::horizontal(),
                                       SamplerConfig{});
    CHECK_FALSE(r.remainder_is_zero);
    CHECK(r.cleared.r_tilde == P("2y^4"));
    CHECK(r.gcd.is_constant());
    CHECK_FALSE(r.common_factor);
    CHECK(r.verdict == Verdict::NoCommonFactor);
}

TEST_CASE("constructed multiples recover the squarefree part")
{
    Gen gen(41);
    for (int t = 0; t < 15; ++t) {
        BiPoly p = gen.divisor(2, 2, 3);
        if (gen.coin())
            p = p * p;
        const BiPoly g = p * P("x^2+1");
        SamplerConfig cfg;
        cfg.sample_count = 5;
        const auto r = common_factor_check(p, g, Direction::horizontal(), cfg);
        REQUIRE(r.common_factor);
        CHECK(associates(*r.common_factor, squarefree_part(p)));
        CHECK(r.verdict == Verdict::CommonFactorFound);
        // Soundness, retested with the oracle division.
        CHECK(zfac_test::gl_divides(*r.common_factor, p));
        CHECK(zfac_test::gl_divides(*r.common_factor, g));
    }
}

TEST_CASE("content of the gcd is reported as the y-only factor")
{
    const BiPoly p = P("(y-2)(x-y)"), g = P("(y-2)(x+y)(x^2+1)");
    SamplerConfig cfg;
    cfg.sample_count = 10;
    const auto r = common_factor_check(p, g, Direction::horizontal(), cfg);
    REQUIRE(r.y_only_factor);
    CHECK(*r.y_only_factor == content_primitive_x(bipoly_gcd(p, g)).content);
    REQUIRE(r.common_factor);
    CHECK(associates(*r.common_factor, P("y-2")));
}

TEST_CASE("cleared remainder zero means a shared factor or a content divisor")
{
    Gen gen(42);
    for (int t = 0; t < 40; ++t) {
        const BiPoly p = gen.divisor(2, 2, 3);
        const BiPoly g = gen.coin() ? p * gen.nonzero_bipoly(1, 2, 2) : gen.divisor(3, 2, 4);
        if (p.is_constant() || g.is_constant())
            continue;
        SamplerConfig cfg;
        cfg.sample_count = 3;
        const auto r = common_factor_check(p, g, Direction::horizontal(), cfg);
        CHECK(r.remainder_is_zero == r.cleared.r_tilde.is_zero());
        if (r.remainder_is_zero) {
            const BiPoly hg = BiPoly::from_uni(r.cleared.h) * g;
            const bool shared = bipoly_gcd(p, hg).deg_x() >= 1;
            const bool content_case = zfac_test::gl_divides(p, BiPoly::from_uni(r.cleared.h));
            CHECK((shared || content_case));
        }
        if (r.verdict == Verdict::CommonFactorFound)
            CHECK(r.common_factor);
    }
}

TEST_CASE("common_factor_check rejects constant inputs")
{
    CHECK_THROWS_AS(common_factor_check(P("3"), P("x"), Direction::horizontal(), SamplerConfig{}),
                    UsageError);
    CHECK_THROWS_AS(common_factor_check(P("x"), BiPoly(), Direction::horizontal(), SamplerConfig{}),
                    UsageError);
}

TEST_CASE("same zero set without witness lines is not evidenced")
{
    // Both vanish only at (0, 1), which lies on the sampled line y = 1.
    const auto r = common_factor_check(P("x^2+(y-1)^2"), P("x^4+(y-1)^4"),
                                       Direction::horizontal(), SamplerConfig{});
    CHECK_FALSE(r.remainder_is_zero);
    CHECK_FALSE(r.common_factor);
    CHECK(r.witness_p.witnesses.empty());
    CHECK(r.zero_set_sample.points_checked > 0);
    CHECK(r.zero_set_sample.mismatches.empty());
    CHECK(r.verdict == Verdict::HypothesisNotEvidenced);
}

TEST_CASE("slanted direction runs in the rotated frame")
{
    const BiPoly f = P("x - y - 1");
    const BiPoly p = f * P("x^2+y^2+1"), g = f * P("x^2+1");
    SamplerConfig cfg;
    cfg.sample_count = 10;
    const auto r = common_factor_check(p, g, Direction{1, 1}, cfg);
    CHECK(r.direction_used == Direction{1, 1});
    CHECK(r.frame_p == change_of_variables(p, Direction{1, 1}));
    REQUIRE(r.common_factor);
    CHECK(associates(*r.common_factor, f));
}

TEST_CASE("verify_same_zero_set_sampled examples")
{
    SamplerConfig cfg;
    auto z = verify_same_zero_set_sampled(P("y-x^2"), P("(y-x^2)(x^2+y^2+1)"), cfg);
    CHECK(z.mismatches.empty());
    CHECK(z.points_checked > 0);

    z = verify_same_zero_set_sampled(P("x^2+y^2"), P("x^4+y^4"), cfg);
    CHECK(z.mismatches.empty());

    z = verify_same_zero_set_sampled(P("y-x^2"), P("y-x^3"), cfg);
    REQUIRE_FALSE(z.mismatches.empty());
    bool found = false;
    for (const auto &m : z.mismatches)
        if (m.vanishing == ZeroSetMismatch::Vanishing::P && m.y == Rational(1) && m.x.exact() &&
            m.x.lo == Rational(-1)) {
            found = true;
            REQUIRE(m.other_value);
            CHECK(*m.other_value == Rational(2));
        }
    CHECK(found);
}

TEST_CASE("zero-set sampling decides irrational points exactly")
{
    // Both contain the circle x^2 + y^2 = 3 with irrational points on y = 1.
    SamplerConfig cfg;
    cfg.sample_count = 1;
    auto z = verify_same_zero_set_sampled(P("x^2+y^2-3"), P("(x^2+y^2-3)(x^2+5)"), cfg);
    CHECK(z.points_checked >= 2);
    CHECK(z.mismatches.empty());
    z = verify_same_zero_set_sampled(P("x^2+y^2-3"), P("x^2+y^2-4"), cfg);
    CHECK(z.mismatches.size() == 4);
}
