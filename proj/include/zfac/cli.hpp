#ifndef ZFAC_CLI_HPP
#define ZFAC_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include <zfac/bipoly.hpp>
#include <zfac/zeroset.hpp>

namespace zfac::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInternal = 2;

enum class Format { Text, Json };

struct RunConfig {
    // "divide", "common-factor", "quat compare", ...
    std::string subcommand;
    // Raw input expressions keyed by flag name without dashes.
    std::map<std::string, std::string> inputs;
    Direction direction = Direction::horizontal();
    SamplerConfig sampler;
    Format format = Format::Text;
    std::optional<std::string> output_path;

    std::optional<std::size_t> threshold; // lines --n
    std::optional<Rational> offset;       // lines --offset
    bool inverse = false;                 // transform --inverse
    std::string side = "both";            // quat divide --side
    std::size_t trials = 1000;            // quat compare --trials
    std::size_t min_witnesses = 1;        // common-factor --min-witnesses
};

// Runs one configured computation. Errors are reported on err and mapped to
// kExitUsage (bad input) or kExitInternal (broken invariant).
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

// Parses argv into a RunConfig and runs it.
int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

// "lo:hi" and "a/b" option values.
std::pair<Rational, Rational> parse_range(const std::string &text);
Direction parse_direction(const std::string &text);

} // namespace zfac::cli

#endif
