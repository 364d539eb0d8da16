#include <zfac/cli.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <zfac/errors.hpp>
#include <zfac/ncquat.hpp>
#include <zfac/parser.hpp>
#include <zfac/pipeline.hpp>
#include <zfac/printer.hpp>
#include <zfac/report.hpp>

namespace zfac::cli {

using nlohmann::json;

namespace {

struct Output {
    json inputs = json::object();
    json result = json::object();
    std::ostringstream text;
};

const std::string &require_input(const RunConfig &cfg, const std::string &name)
{
    auto it = cfg.inputs.find(name);
    if (it == cfg.inputs.end() || it->second.empty())
        throw UsageError(cfg.subcommand + ": --" + name + " is required");
    return it->second;
}

// Syntax errors get the flag name prefixed so the offset can be located.
template <class F>
auto with_flag(const std::string &name, F &&parse)
{
    try {
        return parse();
    } catch (const SyntaxError &e) {
        throw SyntaxError("--" + name + ": " + e.detail(), e.position());
    }
}

BiPoly bipoly_input(const RunConfig &cfg, Output &o, const std::string &name)
{
    const auto &text = require_input(cfg, name);
    BiPoly p = with_flag(name, [&] { return parse_bipoly(text); });
    o.inputs[name] = print_canonical(p);
    return p;
}

NCPoly ncpoly_input(const RunConfig &cfg, Output &o, const std::string &name)
{
    const auto &text = require_input(cfg, name);
    NCPoly f;
    if (text == "builtin:p")
        f = builtin::commutator();
    else if (text == "builtin:g-printed")
        f = builtin::g_printed();
    else if (text == "builtin:g-corrected")
        f = builtin::g_corrected();
    else if (text.rfind("builtin:", 0) == 0)
        throw UsageError("--" + name + ": unknown builtin '" + text +
                         "' (builtin:p, builtin:g-printed, builtin:g-corrected)");
    else
        f = with_flag(name, [&] { return parse_ncpoly(text); });
    o.inputs[name] = print_canonical(f);
    return f;
}

Quaternion quaternion_input(const RunConfig &cfg, Output &o, const std::string &name)
{
    const auto &text = require_input(cfg, name);
    Quaternion q = with_flag(name, [&] { return parse_quaternion(text); });
    o.inputs[name] = q.str();
    return q;
}

std::string degree_text(int d)
{
    return d == kNegInfinity ? "-inf" : std::to_string(d);
}

void sampler_json(const RunConfig &cfg, Output &o)
{
    o.result["sampler"] = {{"samples", cfg.sampler.sample_count},
                           {"range_lo", report::rational(cfg.sampler.range_lo)},
                           {"range_hi", report::rational(cfg.sampler.range_hi)},
                           {"seed", cfg.sampler.seed}};
}

void text_witnesses(std::ostream &t, const std::string &label, const WitnessReport &w)
{
    t << label << ": " << w.witnesses.size() << "/" << w.lines_tested
      << " lines with >= " << w.threshold << " distinct points";
    if (!w.skipped_offsets.empty())
        t << " (" << w.skipped_offsets.size() << " degenerate offsets redrawn)";
    t << "\n";
}

void do_divide(const RunConfig &cfg, Output &o, bool clear)
{
    BiPoly g = bipoly_input(cfg, o, "dividend");
    BiPoly p = bipoly_input(cfg, o, "divisor");
    DivisionResult d = divide_in_x(g, p);
    o.result["division"] = report::to_json(d);
    o.text << "q: " << print_canonical(d.quotient) << "\n"
           << "r: " << print_canonical(d.remainder) << "\n";
    if (clear) {
        ClearedDivision c = clear_denominators(g, p, d);
        o.result["cleared"] = report::to_json(c);
        const bool holds = BiPoly::from_uni(c.h) * g == c.q_tilde * p + c.r_tilde;
        o.result["identity_holds"] = holds;
        o.text << "h: " << print_canonical(c.h) << "\n"
               << "q~: " << print_canonical(c.q_tilde) << "\n"
               << "r~: " << print_canonical(c.r_tilde) << "\n"
               << "identity h*g = q~*p + r~: " << (holds ? "holds" : "FAILS") << "\n";
    }
}

void do_gcd(const RunConfig &cfg, Output &o)
{
    BiPoly p = bipoly_input(cfg, o, "p");
    BiPoly g = bipoly_input(cfg, o, "g");
    BiPoly d = bipoly_gcd(p, g);
    o.result["gcd"] = print_canonical(d);
    o.result["is_constant"] = d.is_constant();
    o.text << "gcd: " << print_canonical(d) << "\n";
}

void do_squarefree(const RunConfig &cfg, Output &o)
{
    BiPoly p = bipoly_input(cfg, o, "p");
    BiPoly s = squarefree_part(p);
    o.result["squarefree_part"] = print_canonical(s);
    o.text << "squarefree part: " << print_canonical(s) << "\n";
}

void do_common_factor(const RunConfig &cfg, Output &o)
{
    BiPoly p = bipoly_input(cfg, o, "p");
    BiPoly g = bipoly_input(cfg, o, "g");
    PipelineOptions opts;
    opts.min_witnesses = cfg.min_witnesses;
    FactorReport r = common_factor_check(p, g, cfg.direction, cfg.sampler, opts);
    o.result = report::to_json(r);
    sampler_json(cfg, o);
    auto &t = o.text;
    t << "direction: " << r.direction_used.str() << "\n";
    if (!r.direction_used.is_horizontal())
        t << "frame p: " << print_canonical(r.frame_p) << "\n"
          << "frame g: " << print_canonical(r.frame_g) << "\n";
    t << "q: " << print_canonical(r.division.quotient) << "\n"
      << "r: " << print_canonical(r.division.remainder) << "\n"
      << "h: " << print_canonical(r.cleared.h) << "\n"
      << "r~: " << print_canonical(r.cleared.r_tilde) << "\n"
      << "gcd: " << print_canonical(r.gcd) << "\n"
      << "common factor: " << (r.common_factor ? print_canonical(*r.common_factor) : "none")
      << "\n";
    if (r.y_only_factor)
        t << "factor in the second coordinate only: " << print_canonical(*r.y_only_factor) << "\n";
    text_witnesses(t, "witness lines p", r.witness_p);
    text_witnesses(t, "witness lines g", r.witness_g);
    t << "zero-set sample: " << r.zero_set_sample.points_checked << " points on "
      << r.zero_set_sample.lines_sampled << " lines, " << r.zero_set_sample.mismatches.size()
      << " mismatches\n"
      << "verdict: " << to_string(r.verdict) << "\n";
}

void do_classify(const RunConfig &cfg, Output &o)
{
    BiPoly p = bipoly_input(cfg, o, "p");
    ParityClass pc = classify_parity(p, cfg.sampler);
    o.result = report::to_json(pc);
    o.result["deg_x"] = report::degree(p.deg_x());
    o.result["deg_y"] = report::degree(p.deg_y());
    sampler_json(cfg, o);
    o.text << "deg_x: " << degree_text(p.deg_x()) << ", deg_y: " << degree_text(p.deg_y()) << "\n"
           << "class: " << to_string(pc.kind) << "\n"
           << "isolated roots: " << pc.witnesses.size() << "\n";
    if (!pc.witnesses.empty()) {
        const auto &w = pc.witnesses.front();
        const char *fixed = pc.kind == ParityClass::Kind::OddDegY ? "x" : "y";
        o.text << "first: " << fixed << " = " << w.fixed << ", root in [" << w.interval.lo << ", "
               << w.interval.hi << "]\n";
    }
}

void do_lines(const RunConfig &cfg, Output &o)
{
    BiPoly p = bipoly_input(cfg, o, "p");
    o.result["direction"] = cfg.direction.str();
    if (cfg.offset) {
        Line line{cfg.direction, *cfg.offset};
        LineCount c = count_on_line(p, line);
        UniPoly restriction = restrict_to_line(p, line);
        o.result["offset"] = report::rational(*cfg.offset);
        o.result["restriction"] = print_canonical(restriction);
        o.result["contained_line"] = c.contained_line;
        o.result["count"] = c.count;
        o.text << "restriction: " << print_canonical(restriction) << "\n";
        if (c.contained_line)
            o.text << "line lies in the zero set\n";
        else
            o.text << "distinct real intersections: " << c.count << "\n";
        return;
    }
    std::size_t n = 0;
    if (cfg.threshold) {
        n = *cfg.threshold;
    } else {
        BiPoly frame = cfg.direction.is_horizontal() ? p : change_of_variables(p, cfg.direction);
        n = frame.deg_x() < 0 ? 0 : static_cast<std::size_t>(frame.deg_x());
    }
    WitnessReport w = find_witness_lines(p, n, cfg.direction, cfg.sampler);
    o.result["witness_report"] = report::to_json(w);
    sampler_json(cfg, o);
    text_witnesses(o.text, "witness lines", w);
}

void do_transform(const RunConfig &cfg, Output &o)
{
    BiPoly p = bipoly_input(cfg, o, "p");
    BiPoly t = cfg.inverse ? inverse_change_of_variables(p, cfg.direction)
                           : change_of_variables(p, cfg.direction);
    o.result["direction"] = cfg.direction.str();
    o.result["inverse"] = cfg.inverse;
    o.result["transformed"] = print_canonical(t);
    o.text << (cfg.inverse ? "p(x, y): " : "P(u, v) with u -> x, v -> y: ") << print_canonical(t)
           << "\n";
}

void do_quat_eval(const RunConfig &cfg, Output &o)
{
    NCPoly f = ncpoly_input(cfg, o, "f");
    Quaternion a = quaternion_input(cfg, o, "a");
    Quaternion b = quaternion_input(cfg, o, "b");
    Quaternion v = nc_eval(f, a, b);
    o.result["value"] = report::quaternion(v);
    o.result["is_zero"] = v.is_zero();
    o.result["commuting"] = a * b == b * a;
    o.text << "f(a, b) = " << v.str() << "\n";
}

void do_quat_divide(const RunConfig &cfg, Output &o)
{
    NCPoly g = ncpoly_input(cfg, o, "g");
    NCPoly p = ncpoly_input(cfg, o, "p");
    std::vector<Side> sides;
    if (cfg.side == "left")
        sides = {Side::Left};
    else if (cfg.side == "right")
        sides = {Side::Right};
    else if (cfg.side == "both")
        sides = {Side::Left, Side::Right};
    else
        throw UsageError("--side must be left, right or both");
    json verdicts = json::array();
    for (Side s : sides) {
        DivisibilityVerdict v = one_sided_divide(g, p, s);
        verdicts.push_back(report::to_json(v));
        o.text << to_string(s) << ": ";
        if (v.quotient) {
            o.text << (s == Side::Right ? "g = p * (" : "g = (") << print_canonical(*v.quotient)
                   << (s == Side::Right ? ")\n" : ") * p\n");
        } else {
            LinearVerdict lv = solve_linear(*v.infeasible_system);
            o.text << "no quotient; " << v.infeasible_system->rows() << " equations in "
                   << v.infeasible_system->columns << " unknowns, " << to_string(lv.kind) << "\n";
        }
    }
    o.result["verdicts"] = verdicts;
}

void do_quat_irreducible(const RunConfig &cfg, Output &o)
{
    NCPoly f = ncpoly_input(cfg, o, "f");
    FactorizationOutcome outcome = prove_no_linear_factorization(f);
    o.result = report::to_json(outcome);
    if (const auto *c = std::get_if<UnsatCertificate>(&outcome)) {
        const bool ok = check_certificate(f, *c);
        o.result["certificate_checked"] = ok;
        o.text << "no factorization into two linear factors\n"
               << "certificate: " << c->branches.size() << " branches, "
               << (ok ? "checked" : "CHECK FAILED") << "\n";
        if (!ok)
            throw InvariantViolation("certificate failed re-verification");
    } else if (const auto *lf = std::get_if<LinearFactorization>(&outcome)) {
        o.text << "factorization: (" << print_canonical(lf->left) << ") * ("
               << print_canonical(lf->right) << ")\n";
    } else {
        o.text << "inconclusive: " << std::get<Inconclusive>(outcome).reason << "\n";
    }
}

void do_quat_compare(const RunConfig &cfg, Output &o)
{
    NCPoly f1 = ncpoly_input(cfg, o, "f1");
    NCPoly f2 = ncpoly_input(cfg, o, "f2");
    AgreementReport a = zero_set_agreement(f1, f2, cfg.sampler.seed, cfg.trials);
    o.result = report::to_json(a);
    o.result["seed"] = cfg.sampler.seed;
    o.result["zero_sets_agree"] = a.disagreements.empty();
    o.text << "pairs: " << a.anchor_pairs << " anchor, " << a.commuting_pairs << " commuting, "
           << a.generic_pairs << " generic\n"
           << "disagreements: " << a.disagreements.size() << "\n";
    if (!a.disagreements.empty()) {
        const auto &d = a.disagreements.front();
        o.text << "witness: a = " << d.pair.first.str() << ", b = " << d.pair.second.str()
               << (d.commuting ? " (commuting)" : " (non-commuting)") << ", f1 = "
               << d.f1_value.str() << ", f2 = " << d.f2_value.str() << "\n";
    }
}

void dispatch(const RunConfig &cfg, Output &o)
{
    const std::string &s = cfg.subcommand;
    if (s == "divide")
        do_divide(cfg, o, false);
    else if (s == "clear")
        do_divide(cfg, o, true);
    else if (s == "gcd")
        do_gcd(cfg, o);
    else if (s == "squarefree")
        do_squarefree(cfg, o);
    else if (s == "common-factor")
        do_common_factor(cfg, o);
    else if (s == "classify")
        do_classify(cfg, o);
    else if (s == "lines")
        do_lines(cfg, o);
    else if (s == "transform")
        do_transform(cfg, o);
    else if (s == "quat eval")
        do_quat_eval(cfg, o);
    else if (s == "quat divide")
        do_quat_divide(cfg, o);
    else if (s == "quat irreducible")
        do_quat_irreducible(cfg, o);
    else if (s == "quat compare")
        do_quat_compare(cfg, o);
    else
        throw UsageError("unknown subcommand '" + s + "'");
}

} // namespace

std::pair<Rational, Rational> parse_range(const std::string &text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw UsageError("--range expects <lo>:<hi>, got '" + text + "'");
    try {
        return {Rational::parse(text.substr(0, colon)), Rational::parse(text.substr(colon + 1))};
    } catch (const std::exception &e) {
        throw UsageError("--range: " + std::string(e.what()));
    }
}

Direction parse_direction(const std::string &text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        throw UsageError("--direction expects <a>/<b>, got '" + text + "'");
    long a = 0, b = 0;
    try {
        std::size_t used = 0;
        a = std::stol(text.substr(0, slash), &used);
        if (used != slash)
            throw std::invalid_argument("trailing characters");
        const std::string rest = text.substr(slash + 1);
        b = std::stol(rest, &used);
        if (used != rest.size())
            throw std::invalid_argument("trailing characters");
    } catch (const std::exception &) {
        throw UsageError("--direction expects integers <a>/<b>, got '" + text + "'");
    }
    return Direction::normalized(a, b);
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    try {
        config.sampler.validate();
        Output o;
        dispatch(config, o);
        std::string rendered;
        if (config.format == Format::Json) {
            json doc{{"schema_version", report::kSchemaVersion},
                     {"subcommand", config.subcommand},
                     {"inputs", o.inputs},
                     {"result", o.result}};
            rendered = doc.dump(2) + "\n";
        } else {
            rendered = o.text.str();
        }
        if (config.output_path) {
            std::ofstream file(*config.output_path, std::ios::binary);
            if (!file)
                throw UsageError("cannot open output file '" + *config.output_path + "'");
            file << rendered;
            if (!file)
                throw UsageError("failed writing '" + *config.output_path + "'");
        } else {
            out << rendered;
        }
        return kExitOk;
    } catch (const SyntaxError &e) {
        err << "syntax error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DivisionByZero &e) {
        err << "division by zero: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError &e) {
        err << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvariantViolation &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact common-factor and zero-set computations for bivariate polynomials, "
                 "plus quaternion free-algebra checks."};
    app.name("zfac");
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string format = "text", range, direction, offset, output;
    std::size_t samples = cfg.sampler.sample_count;
    std::uint64_t seed = cfg.sampler.seed;
    std::size_t threshold = 0;

    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", seed, "Sampler seed")->capture_default_str();
    app.add_option("--samples", samples, "Number of sampled lines or points")->capture_default_str();
    app.add_option("--range", range, "Sampling range <lo>:<hi> (default 1:100)");
    app.add_option("--direction", direction, "Line direction <a>/<b> (default 0/1, horizontal)");
    app.add_option("--output", output, "Write the report to this file");

    auto input = [&](CLI::App *sub, const std::string &name, const std::string &help) {
        sub->add_option("--" + name, cfg.inputs[name], help)->required();
    };

    auto *divide = app.add_subcommand("divide", "Divide in x over Q(y)");
    input(divide, "dividend", "Dividend g");
    input(divide, "divisor", "Divisor p");
    auto *clear = app.add_subcommand("clear", "Divide and clear denominators");
    input(clear, "dividend", "Dividend g");
    input(clear, "divisor", "Divisor p");
    auto *gcd = app.add_subcommand("gcd", "Greatest common divisor");
    input(gcd, "p", "First polynomial");
    input(gcd, "g", "Second polynomial");
    auto *sqf = app.add_subcommand("squarefree", "Squarefree part");
    input(sqf, "p", "Polynomial");
    auto *cf = app.add_subcommand("common-factor", "Common-factor check with line evidence");
    input(cf, "p", "Polynomial p");
    input(cf, "g", "Polynomial g");
    cf->add_option("--min-witnesses", cfg.min_witnesses, "Witness lines required per input")
        ->capture_default_str();
    auto *classify = app.add_subcommand("classify", "Degree parity class with isolated roots");
    input(classify, "p", "Polynomial");
    auto *lines = app.add_subcommand("lines", "Intersections with a family of parallel lines");
    input(lines, "p", "Polynomial");
    auto *n_opt = lines->add_option("--n", threshold, "Witness threshold (default deg in x)");
    lines->add_option("--offset", offset, "Count on the single line with this offset");
    auto *transform = app.add_subcommand("transform", "Rotate coordinates to a direction");
    input(transform, "p", "Polynomial");
    transform->add_flag("--inverse", cfg.inverse, "Map back to the original coordinates");

    auto *quat = app.add_subcommand("quat", "Quaternion free-algebra computations");
    quat->require_subcommand(1);
    quat->fallthrough();
    auto *q_eval = quat->add_subcommand("eval", "Evaluate at a pair of quaternions");
    input(q_eval, "f", "Polynomial in x, y (or builtin:p|g-printed|g-corrected)");
    input(q_eval, "a", "Quaternion for x");
    input(q_eval, "b", "Quaternion for y");
    auto *q_div = quat->add_subcommand("divide", "One-sided divisibility");
    input(q_div, "g", "Dividend");
    input(q_div, "p", "Divisor");
    q_div->add_option("--side", cfg.side, "left, right or both")
        ->check(CLI::IsMember({"left", "right", "both"}))
        ->capture_default_str();
    auto *q_irr = quat->add_subcommand("irreducible", "Search for a linear factorization");
    input(q_irr, "f", "Degree-2 polynomial");
    auto *q_cmp = quat->add_subcommand("compare", "Compare zero sets on sampled pairs");
    input(q_cmp, "f1", "First polynomial");
    input(q_cmp, "f2", "Second polynomial");
    q_cmp->add_option("--trials", cfg.trials, "Pairs of each kind")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    // Only the chosen subcommand's flags belong in the config.
    std::vector<std::string> path;
    const CLI::App *leaf = &app;
    while (!leaf->get_subcommands().empty()) {
        leaf = leaf->get_subcommands().front();
        path.push_back(leaf->get_name());
    }
    for (std::size_t i = 0; i < path.size(); ++i)
        cfg.subcommand += (i ? " " : "") + path[i];
    std::map<std::string, std::string> used;
    for (const CLI::Option *opt : leaf->get_options()) {
        const std::string name = opt->get_single_name();
        auto it = cfg.inputs.find(name);
        if (it != cfg.inputs.end())
            used.insert(*it);
    }
    cfg.inputs = std::move(used);

    try {
        cfg.format = format == "json" ? Format::Json : Format::Text;
        cfg.sampler.seed = seed;
        cfg.sampler.sample_count = samples;
        if (!range.empty()) {
            auto [lo, hi] = parse_range(range);
            cfg.sampler.range_lo = lo;
            cfg.sampler.range_hi = hi;
        }
        if (!direction.empty())
            cfg.direction = parse_direction(direction);
        if (!output.empty())
            cfg.output_path = output;
        if (*n_opt)
            cfg.threshold = threshold;
        if (!offset.empty()) {
            try {
                cfg.offset = Rational::parse(offset);
            } catch (const std::exception &e) {
                throw UsageError("--offset: " + std::string(e.what()));
            }
        }
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    return run(cfg, out, err);
}

} // namespace zfac::cli
