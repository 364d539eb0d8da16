#include <doctest.h>

#include <zfac/errors.hpp>
#include <zfac/parser.hpp>
#include <zfac/zeroset.hpp>

#include "support.hpp"

using namespace zfac;
using zfac_test::Gen;

namespace {

BiPoly P(const char *s)
{
    return parse_bipoly(s);
}

Line horizontal(long c)
{
    return Line{Direction::horizontal(), Rational(c)};
}

// Distinct roots of p(x, y0) found by scanning x over a grid; roots are
// planted on the grid by the caller.
std::size_t scan_on_horizontal(const BiPoly &p, const Rational &y0, long lo, long hi, long den)
{
    std::size_t roots = 0;
    int prev = 0;
    for (long k = lo * den; k <= hi * den; ++k) {
        const int s = p.eval(Rational(k, den), y0).sign();
        if (s == 0)
            ++roots;
        else if (prev != 0 && s != prev)
            ++roots;
        prev = s;
    }
    return roots;
}

} // namespace

TEST_CASE("count_on_line examples")
{
    CHECK(count_on_line(P("x^2+y^2-1"), horizontal(0)).count == 2);
    CHECK(count_on_line(P("x^4+y^4-1"), horizontal(0)).count == 2);
    for (long c : {-3, 0, 1, 50}) {
        const auto lc = count_on_line(P("x^2+1"), horizontal(c));
        CHECK_FALSE(lc.contained_line);
        CHECK(lc.count == 0);
    }
}

TEST_CASE("a line inside the zero set is reported, not counted")
{
    const auto lc = count_on_line(P("(y-1)(x^2+1)"), horizontal(1));
    CHECK(lc.contained_line);
    const auto diag = count_on_line(P("x - y - 2"), Line{Direction{1, 1}, Rational(2)});
    CHECK(diag.contained_line);
}

TEST_CASE("restrict_to_line on a slanted line")
{
    // x - y = 0 meets x^2 + y^2 = 2 at (1, 1) and (-1, -1).
    const Line l{Direction{1, 1}, Rational(0)};
    CHECK(count_on_line(P("x^2+y^2-2"), l).count == 2);
    // Tangent line x + y = 2 touches the same circle once.
    CHECK(count_on_line(P("x^2+y^2-2"), Line{Direction::normalized(-1, 1), Rational(-2)}).count == 1);
}

TEST_CASE("count_on_line agrees with the scan oracle on planted roots")
{
    Gen gen(31);
    for (int t = 0; t < 100; ++t) {
        // p = c * prod (x - a_i y - b_i) with small integer a_i, b_i.
        BiPoly p = BiPoly::constant(gen.nonzero_rational(-3, 3));
        const long k = gen.integer(1, 4);
        for (long i = 0; i < k; ++i)
            p = p * (BiPoly::x() - Rational(gen.integer(-2, 2)) * BiPoly::y() -
                     BiPoly::constant(Rational(gen.integer(-3, 3))));
        if (gen.coin())
            p = p * (BiPoly::x().pow(2) + BiPoly::constant(Rational(1)));
        const long y0 = gen.integer(-3, 3);
        const auto lc = count_on_line(p, horizontal(y0));
        REQUIRE_FALSE(lc.contained_line);
        CHECK(lc.count == scan_on_horizontal(p, Rational(y0), -20, 20, 2));
    }
}

TEST_CASE("distinct linear factors give exactly k points away from crossings")
{
    Gen gen(32);
    for (int t = 0; t < 10; ++t) {
        const long k = gen.integer(1, 4);
        std::vector<std::pair<long, long>> roots; // x = a y + b
        while (static_cast<long>(roots.size()) < k) {
            std::pair<long, long> r{gen.integer(-3, 3), gen.integer(-5, 5)};
            if (std::find_if(roots.begin(), roots.end(),
                             [&](auto &o) { return o.first == r.first; }) == roots.end())
                roots.push_back(r);
        }
        BiPoly p = BiPoly::constant(Rational(1));
        for (auto [a, b] : roots)
            p = p * (BiPoly::x() - Rational(a) * BiPoly::y() - BiPoly::constant(Rational(b)));
        for (long y0 = 1; y0 <= 100; ++y0) {
            bool exceptional = false;
            for (std::size_t i = 0; i < roots.size(); ++i)
                for (std::size_t j = i + 1; j < roots.size(); ++j)
                    exceptional |= roots[i].first * y0 + roots[i].second ==
                                   roots[j].first * y0 + roots[j].second;
            if (!exceptional)
                CHECK(count_on_line(p, horizontal(y0)).count == static_cast<std::size_t>(k));
        }
    }
}

TEST_CASE("count_on_line matches an independent line parametrization")
{
    Gen gen(33);
    for (int t = 0; t < 50; ++t) {
        const BiPoly p = gen.nonzero_bipoly(3, 3, 4);
        const long a = gen.integer(-3, 3), b = gen.integer(1, 3);
        const Direction d = Direction::normalized(a, b);
        const Rational c = gen.rational(-5, 5, 2);
        // d.a x - d.b y = c with d.b > 0: y = (d.a x - c) / d.b. Horizontal
        // lines are y = c instead.
        const BiPoly y_image =
            d.is_horizontal()
                ? BiPoly::constant(c)
                : (Rational(d.a) * BiPoly::x() - BiPoly::constant(c)) * Rational(1, d.b);
        const UniPoly along = substitute(p, BiPoly::x(), y_image).at_y(Rational(0));
        const auto lc = count_on_line(p, Line{d, c});
        if (along.is_zero()) {
            CHECK(lc.contained_line);
        } else {
            CHECK_FALSE(lc.contained_line);
            CHECK(lc.count == sturm_count(along));
        }
    }
}

TEST_CASE("sampler config")
{
    SamplerConfig cfg;
    CHECK(cfg.seed == kDefaultSeed);
    auto pts = cfg.evenly_spaced();
    REQUIRE(pts.size() == 100);
    CHECK(pts.front() == Rational(1));
    CHECK(pts.back() == Rational(100));
    CHECK(pts[1] == Rational(2));

    cfg.sample_count = 1;
    CHECK(cfg.evenly_spaced() == std::vector<Rational>{Rational(1)});

    cfg.sample_count = 0;
    CHECK_THROWS_AS(cfg.validate(), UsageError);
    cfg.sample_count = 3;
    cfg.range_lo = Rational(5);
    cfg.range_hi = Rational(2);
    CHECK_THROWS_AS(cfg.validate(), UsageError);
}

TEST_CASE("find_witness_lines examples")
{
    const SamplerConfig cfg;
    auto w = find_witness_lines(P("y-x^2"), 2, Direction::horizontal(), cfg);
    CHECK(w.lines_tested == 100);
    CHECK(w.witnesses.size() == 100);
    CHECK(w.fraction() == doctest::Approx(1.0));
    for (const auto &wl : w.witnesses) {
        CHECK(wl.distinct_intersections >= wl.threshold);
        CHECK(wl.distinct_intersections == 2);
    }

    w = find_witness_lines(P("x^2+y^2"), 1, Direction::horizontal(), cfg);
    CHECK(w.witnesses.empty());
    CHECK(w.lines_tested == 100);

    w = find_witness_lines(P("x-3y"), 1, Direction::horizontal(), cfg);
    CHECK(w.witnesses.size() == w.lines_tested);
}

TEST_CASE("degenerate offsets are recorded and refilled")
{
    SamplerConfig cfg;
    cfg.sample_count = 10; // offsets 1, 12, 23, ...
    const BiPoly p = P("(y-12)x^2 + x - 1");
    const auto w = find_witness_lines(p, 2, Direction::horizontal(), cfg);
    REQUIRE(w.skipped_offsets.size() == 1);
    CHECK(w.skipped_offsets[0] == Rational(12));
    CHECK(w.lines_tested == 10);
    for (const auto &wl : w.witnesses)
        CHECK(wl.line.offset != Rational(12));

    const auto again = find_witness_lines(p, 2, Direction::horizontal(), cfg);
    REQUIRE(again.witnesses.size() == w.witnesses.size());
    for (std::size_t i = 0; i < w.witnesses.size(); ++i)
        CHECK(again.witnesses[i].line == w.witnesses[i].line);
}

TEST_CASE("classify_parity examples")
{
    SamplerConfig cfg;
    cfg.sample_count = 20;
    const BiPoly cubic = P("5x^3-2");
    auto pc = classify_parity(cubic, cfg);
    CHECK(pc.kind == ParityClass::Kind::OddDegX);
    CHECK(pc.witnesses.size() == 20);
    for (const auto &w : pc.witnesses) {
        const UniPoly f = cubic.at_y(w.fixed);
        if (w.interval.exact())
            CHECK(f.eval(w.interval.lo).is_zero());
        else
            CHECK(sturm_count(f, w.interval.lo, w.interval.hi) == 1);
    }

    pc = classify_parity(P("x^2+y^2"), cfg);
    CHECK(pc.kind == ParityClass::Kind::BothEven);
    CHECK(pc.witnesses.empty());

    pc = classify_parity(P("yx^2+yx"), cfg);
    CHECK(pc.kind == ParityClass::Kind::OddDegY);
    CHECK_FALSE(pc.witnesses.empty());

    CHECK_THROWS_AS(classify_parity(P("3"), cfg), DomainError);
}

TEST_CASE("classify_parity skips offsets where the degree drops")
{
    SamplerConfig cfg;
    cfg.sample_count = 5; // y = 1, 25.75, ...
    const auto pc = classify_parity(P("(y-1)x^3 + x + 1"), cfg);
    CHECK(pc.kind == ParityClass::Kind::OddDegX);
    CHECK(pc.witnesses.size() == 4);
    for (const auto &w : pc.witnesses)
        CHECK(w.fixed != Rational(1));
}
