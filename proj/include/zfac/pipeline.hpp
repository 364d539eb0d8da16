#ifndef ZFAC_PIPELINE_HPP
#define ZFAC_PIPELINE_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <zfac/bipoly.hpp>
#include <zfac/zeroset.hpp>

namespace zfac {

// A sampled point on the zero set of one polynomial at which the other
// polynomial provably does not vanish.
struct ZeroSetMismatch {
    enum class Vanishing { P, G };

    Vanishing vanishing = Vanishing::P;
    Rational y;          // the sampled horizontal line
    RootInterval x;      // isolates the x-coordinate (exact when lo == hi)
    std::optional<Rational> other_value; // value of the other polynomial, when exact
};

struct ZeroSetSample {
    std::size_t lines_sampled = 0;
    std::size_t points_checked = 0;
    std::vector<ZeroSetMismatch> mismatches;
};

// Walks the horizontal lines of cfg, isolates the real zeros of each
// polynomial on them and decides exactly whether the other one vanishes there.
ZeroSetSample verify_same_zero_set_sampled(const BiPoly &p, const BiPoly &g,
                                           const SamplerConfig &cfg);

enum class Verdict { CommonFactorFound, NoCommonFactor, HypothesisNotEvidenced };

std::string_view to_string(Verdict v);

struct FactorReport {
    Direction direction_used;
    // Inputs in the frame where the lines are horizontal (the inputs themselves
    // for the horizontal direction).
    BiPoly frame_p;
    BiPoly frame_g;
    DivisionResult division;
    ClearedDivision cleared;
    bool remainder_is_zero = false;
    // Normalized gcd of the inputs, in the original coordinates.
    BiPoly gcd;
    std::optional<BiPoly> common_factor;
    // Content of the frame gcd: a polynomial in the frame's second coordinate
    // (y for horizontal runs, a x - b y otherwise).
    std::optional<UniPoly> y_only_factor;
    std::size_t threshold = 0;
    WitnessReport witness_p;
    WitnessReport witness_g;
    ZeroSetSample zero_set_sample;
    Verdict verdict = Verdict::NoCommonFactor;
};

struct PipelineOptions {
    // Witness lines each input needs before the line hypothesis counts as
    // evidenced.
    std::size_t min_witnesses = 1;
};

FactorReport common_factor_check(const BiPoly &p, const BiPoly &g, Direction direction,
                                 const SamplerConfig &cfg, const PipelineOptions &opts = {});

} // namespace zfac

#endif
