#include <zfac/zeroset.hpp>

#include <algorithm>
#include <random>

#include <zfac/errors.hpp>

namespace zfac {

UniPoly restrict_to_line(const BiPoly &p, const Line &line)
{
    if (line.direction.is_horizontal())
        return p.at_y(line.offset);
    return change_of_variables(p, line.direction).at_y(line.offset);
}

LineCount count_on_line(const BiPoly &p, const Line &line)
{
    const UniPoly r = restrict_to_line(p, line);
    if (r.is_zero())
        return {true, 0};
    return {false, sturm_count(r)};
}

void SamplerConfig::validate() const
{
    if (sample_count == 0)
        throw UsageError("sample count must be positive");
    if (range_lo > range_hi)
        throw UsageError("sampling range is empty");
}

std::vector<Rational> SamplerConfig::evenly_spaced() const
{
    validate();
    std::vector<Rational> out;
    out.reserve(sample_count);
    if (sample_count == 1) {
        out.push_back(range_lo);
        return out;
    }
    const Rational step = (range_hi - range_lo) / Rational(sample_count - 1);
    for (std::size_t k = 0; k < sample_count; ++k)
        out.push_back(range_lo + step * Rational(k));
    return out;
}

namespace {

// Uniform dyadic rational in [lo, hi].
Rational draw_offset(std::mt19937_64 &rng, const Rational &lo, const Rational &hi)
{
    const unsigned long k = static_cast<unsigned long>(rng() >> 32);
    return lo + (hi - lo) * Rational(mpz_class(k), mpz_class(1) << 32);
}

} // namespace

WitnessReport find_witness_lines(const BiPoly &p, std::size_t threshold, Direction direction,
                                 const SamplerConfig &cfg)
{
    if (p.is_zero())
        throw UsageError("witness lines of the zero polynomial");
    direction = Direction::normalized(direction.a, direction.b);
    const BiPoly frame = direction.is_horizontal() ? p : change_of_variables(p, direction);
    const int generic_degree = frame.deg_x();

    WitnessReport report;
    report.direction = direction;
    report.threshold = threshold;

    std::mt19937_64 rng(cfg.seed);
    std::vector<Rational> used;
    auto test_offset = [&](const Rational &c) {
        used.push_back(c);
        const UniPoly r = frame.at_y(c);
        if (r.is_zero() || r.degree() < generic_degree)
            return false;
        ++report.lines_tested;
        const std::size_t n = sturm_count(r);
        if (n >= threshold)
            report.witnesses.push_back({{direction, c}, n, threshold});
        return true;
    };

    std::size_t pending_refills = 0;
    for (const auto &c : cfg.evenly_spaced()) {
        if (!test_offset(c)) {
            report.skipped_offsets.push_back(c);
            ++pending_refills;
        }
    }
    // Degenerate offsets are finitely many, so a bounded number of draws
    // suffices in practice.
    for (std::size_t attempts = 0; pending_refills > 0 && attempts < 64 * cfg.sample_count;
         ++attempts) {
        const Rational c = draw_offset(rng, cfg.range_lo, cfg.range_hi);
        if (std::find(used.begin(), used.end(), c) != used.end())
            continue;
        if (test_offset(c))
            --pending_refills;
        else
            report.skipped_offsets.push_back(c);
    }
    return report;
}

std::string_view to_string(ParityClass::Kind k)
{
    switch (k) {
    case ParityClass::Kind::OddDegX:
        return "OddDegX";
    case ParityClass::Kind::OddDegY:
        return "OddDegY";
    case ParityClass::Kind::BothEven:
        return "BothEven";
    }
    return "?";
}

ParityClass classify_parity(const BiPoly &p, const SamplerConfig &cfg)
{
    if (p.is_constant())
        throw DomainError("parity classification of a constant polynomial");
    const Degrees d = p.degrees();
    ParityClass out;
    if (d.x % 2 != 0)
        out.kind = ParityClass::Kind::OddDegX;
    else if (d.y % 2 != 0)
        out.kind = ParityClass::Kind::OddDegY;
    else
        return out;

    const bool along_x = out.kind == ParityClass::Kind::OddDegX;
    const int full_degree = along_x ? d.x : d.y;
    for (const auto &fixed : cfg.evenly_spaced()) {
        const UniPoly r = along_x ? p.at_y(fixed) : p.at_x(fixed);
        if (r.degree() < full_degree)
            continue; // leading coefficient vanishes here
        const auto roots = isolate_roots(r, 8);
        ZFAC_ENSURE(!roots.empty(), "odd-degree restriction has a real root");
        out.witnesses.push_back({fixed, roots.front()});
    }
    return out;
}

} // namespace zfac
