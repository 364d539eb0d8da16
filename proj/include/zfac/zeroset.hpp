#ifndef ZFAC_ZEROSET_HPP
#define ZFAC_ZEROSET_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include <zfac/bipoly.hpp>
#include <zfac/rational.hpp>
#include <zfac/unipoly.hpp>

namespace zfac {

// A member of the parallel family with the given direction. Horizontal lines
// are y = offset; every other direction (a, b) is a x - b y = offset.
struct Line {
    Direction direction;
    Rational offset;

    friend bool operator==(const Line &, const Line &) = default;
};

// Restriction of p to the line as a polynomial in the line parameter. For a
// horizontal line the parameter is x itself; otherwise it is u = b x + a y.
UniPoly restrict_to_line(const BiPoly &p, const Line &line);

struct LineCount {
    bool contained_line = false; // the whole line lies in Z(p)
    std::size_t count = 0;       // distinct real intersections otherwise
};

LineCount count_on_line(const BiPoly &p, const Line &line);

inline constexpr std::uint64_t kDefaultSeed = 20240229;

struct SamplerConfig {
    std::size_t sample_count = 100;
    Rational range_lo{1};
    Rational range_hi{100};
    std::uint64_t seed = kDefaultSeed;

    // Throws UsageError unless sample_count >= 1 and the range is nonempty.
    void validate() const;
    // sample_count points from range_lo to range_hi inclusive.
    std::vector<Rational> evenly_spaced() const;
};

struct WitnessLine {
    Line line;
    std::size_t distinct_intersections = 0;
    std::size_t threshold = 0;
};

struct WitnessReport {
    Direction direction;
    std::size_t threshold = 0;
    std::size_t lines_tested = 0;
    std::vector<WitnessLine> witnesses;
    // Offsets where the restriction degenerated (leading coefficient vanished
    // or the line lies in the zero set); each was replaced by a random draw.
    std::vector<Rational> skipped_offsets;

    double fraction() const
    {
        return lines_tested == 0 ? 0.0
                                 : static_cast<double>(witnesses.size()) /
                                       static_cast<double>(lines_tested);
    }
};

WitnessReport find_witness_lines(const BiPoly &p, std::size_t threshold, Direction direction,
                                 const SamplerConfig &cfg);

struct ParityWitness {
    Rational fixed;        // y0 for OddDegX, x0 for OddDegY
    RootInterval interval; // isolates a root in the other coordinate
};

struct ParityClass {
    enum class Kind { OddDegX, OddDegY, BothEven };

    Kind kind = Kind::BothEven;
    std::vector<ParityWitness> witnesses;
};

std::string_view to_string(ParityClass::Kind k);

ParityClass classify_parity(const BiPoly &p, const SamplerConfig &cfg);

} // namespace zfac

#endif
