#include <zfac/ncquat.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include <zfac/errors.hpp>

namespace zfac {

// ------------------------------------------------------------- sampling

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Independent stream per trial, so trials can be generated in any order.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t stream, std::size_t trial)
{
    return std::mt19937_64(splitmix64(splitmix64(seed ^ stream) + trial));
}

Rational grid(std::mt19937_64 &rng)
{
    return Rational(static_cast<long>(rng() % 11) - 5);
}

Quaternion grid_quaternion(std::mt19937_64 &rng)
{
    Rational w = grid(rng), x = grid(rng), y = grid(rng), z = grid(rng);
    return {w, x, y, z};
}

bool commute(const Quaternion &a, const Quaternion &b)
{
    return q_mul(a, b) == q_mul(b, a);
}

} // namespace

std::vector<QuaternionPair> sample_commuting(std::uint64_t seed, std::size_t count)
{
    if (count == 0)
        throw UsageError("sample count must be positive");
    const NCPoly p = builtin::commutator();
    std::vector<QuaternionPair> out;
    out.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
        auto rng = trial_rng(seed, 0xC0 /* commuting stream */, t);
        Quaternion u;
        while (u.is_zero()) {
            Rational ux = grid(rng), uy = grid(rng), uz = grid(rng);
            u = Quaternion(0, ux, uy, uz);
        }
        const Rational alpha = grid(rng), beta = grid(rng), gamma = grid(rng), delta = grid(rng);
        QuaternionPair pr{Quaternion(alpha) + q_mul(beta, u), Quaternion(gamma) + q_mul(delta, u)};
        ZFAC_ENSURE(nc_eval(p, pr.first, pr.second).is_zero(), "sampled pair commutes");
        out.push_back(std::move(pr));
    }
    return out;
}

std::vector<QuaternionPair> sample_noncommuting(std::uint64_t seed, std::size_t count)
{
    if (count == 0)
        throw UsageError("sample count must be positive");
    std::vector<QuaternionPair> out;
    out.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
        auto rng = trial_rng(seed, 0x6E /* generic stream */, t);
        for (;;) {
            Quaternion a = grid_quaternion(rng);
            Quaternion b = grid_quaternion(rng);
            if (!commute(a, b)) {
                out.emplace_back(std::move(a), std::move(b));
                break;
            }
        }
    }
    return out;
}

// ------------------------------------------------- one-sided divisibility

namespace {

const std::array<const char *, 4> kComponent{"w", "i", "j", "k"};

std::array<Quaternion, 4> basis()
{
    return {Quaternion(1), Quaternion::i(), Quaternion::j(), Quaternion::k()};
}

} // namespace

Mat4 left_mul_matrix(const Quaternion &q)
{
    Mat4 m;
    const auto e = basis();
    for (std::size_t c = 0; c < 4; ++c) {
        const auto col = q_mul(q, e[c]).components();
        for (std::size_t r = 0; r < 4; ++r)
            m[r][c] = col[r];
    }
    return m;
}

Mat4 right_mul_matrix(const Quaternion &q)
{
    Mat4 m;
    const auto e = basis();
    for (std::size_t c = 0; c < 4; ++c) {
        const auto col = q_mul(e[c], q).components();
        for (std::size_t r = 0; r < 4; ++r)
            m[r][c] = col[r];
    }
    return m;
}

std::string_view to_string(Side s)
{
    return s == Side::Left ? "Left" : "Right";
}

DivisibilityVerdict one_sided_divide(const NCPoly &g, const NCPoly &p, Side side)
{
    const int dp = p.degree();
    if (dp < 1)
        throw UsageError("divisor must have degree at least 1");
    const int dg = g.is_zero() ? -1 : g.degree();
    const int dh = dg - dp;

    DivisibilityVerdict out;
    out.side = side;
    const std::vector<NCWord> unknowns = dh >= 0 ? words_up_to(static_cast<std::size_t>(dh))
                                                 : std::vector<NCWord>{};
    for (const auto &v : unknowns)
        for (const char *comp : kComponent)
            out.column_labels.push_back(v.str() + "." + comp);

    const std::vector<NCWord> row_words =
        dg >= 0 ? words_up_to(static_cast<std::size_t>(dg)) : std::vector<NCWord>{};
    std::map<NCWord, std::size_t> row_of;
    for (std::size_t k = 0; k < row_words.size(); ++k)
        row_of.emplace(row_words[k], k);

    const std::size_t cols = 4 * unknowns.size();
    std::vector<std::vector<Rational>> rows(4 * row_words.size(), std::vector<Rational>(cols));
    for (const auto &[u, pu] : p.terms()) {
        const Mat4 m = side == Side::Right ? left_mul_matrix(pu) : right_mul_matrix(pu);
        for (std::size_t j = 0; j < unknowns.size(); ++j) {
            const NCWord w = side == Side::Right ? u * unknowns[j] : unknowns[j] * u;
            auto it = row_of.find(w);
            ZFAC_ENSURE(it != row_of.end(), "product word within the degree bound");
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t c = 0; c < 4; ++c)
                    rows[4 * it->second + r][4 * j + c] += m[r][c];
        }
    }

    LinearSystem sys;
    sys.columns = cols;
    for (std::size_t k = 0; k < row_words.size(); ++k) {
        const auto target = g.coeff(row_words[k]).components();
        for (std::size_t r = 0; r < 4; ++r) {
            auto &row = rows[4 * k + r];
            const bool trivial = target[r].is_zero() &&
                                 std::all_of(row.begin(), row.end(),
                                             [](const Rational &v) { return v.is_zero(); });
            if (trivial)
                continue;
            out.row_labels.push_back(row_words[k].str() + "." + kComponent[r]);
            sys.add_row(std::move(row), target[r]);
        }
    }

    const LinearVerdict lv = solve_linear(sys);
    if (lv.kind == LinearVerdict::Kind::Infeasible) {
        out.infeasible_system = std::move(sys);
        return out;
    }
    NCPoly h;
    const auto &sol = *lv.solution;
    for (std::size_t j = 0; j < unknowns.size(); ++j)
        h += NCPoly::term({sol[4 * j], sol[4 * j + 1], sol[4 * j + 2], sol[4 * j + 3]}, unknowns[j]);
    ZFAC_ENSURE((side == Side::Right ? nc_mul(p, h) : nc_mul(h, p)) == g,
                "one-sided quotient re-expands to the dividend");
    out.quotient = std::move(h);
    return out;
}

// ------------------------------------------- linear factorization search

std::string_view to_string(Slot s)
{
    switch (s) {
    case Slot::a:
        return "a";
    case Slot::b:
        return "b";
    case Slot::c:
        return "c";
    case Slot::A:
        return "A";
    case Slot::B:
        return "B";
    case Slot::C:
        return "C";
    }
    return "?";
}

std::string_view to_string(CertificateBranch::Closure c)
{
    switch (c) {
    case CertificateBranch::Closure::ZeroProduct:
        return "ZeroProduct";
    case CertificateBranch::Closure::NonzeroProduct:
        return "NonzeroProduct";
    case CertificateBranch::Closure::Algebraic:
        return "Algebraic";
    }
    return "?";
}

namespace {

struct ProductEquation {
    const char *word;
    Slot left;
    Slot right;
};

// Coefficient equations of (a x + b y + c)(A x + B y + C) that are single
// products.
constexpr std::array<ProductEquation, 5> kProducts{{{"xx", Slot::a, Slot::A},
                                                    {"xy", Slot::a, Slot::B},
                                                    {"yx", Slot::b, Slot::A},
                                                    {"yy", Slot::b, Slot::B},
                                                    {"1", Slot::c, Slot::C}}};

using Pattern = std::array<std::optional<bool>, 6>; // slot -> is zero

std::size_t idx(Slot s)
{
    return static_cast<std::size_t>(s);
}

Quaternion target_coeff(const NCPoly &t, const char *word)
{
    return t.coeff(NCWord::from_string(word));
}

std::string product_text(const ProductEquation &eq, const Quaternion &t)
{
    return std::string(to_string(eq.left)) + "*" + std::string(to_string(eq.right)) + " = " +
           t.str();
}

struct PatternClosed {
    std::string reason;
};

using PatternOutcome = std::variant<LinearFactorization, PatternClosed, Inconclusive>;

void add_block(std::vector<Rational> &row, std::size_t offset, const Mat4 &m, std::size_t r)
{
    for (std::size_t c = 0; c < 4; ++c)
        row[offset + c] += m[r][c];
}

// Given the zero pattern reached at a leaf, fixes the scaling freedom
// (l -> l s, r -> s^-1 r), solves the quadratic block by inversion and the
// remaining coefficient equations as a linear system.
PatternOutcome solve_pattern(const NCPoly &target, const Pattern &zero)
{
    const Quaternion txx = target_coeff(target, "xx"), txy = target_coeff(target, "xy"),
                     tyx = target_coeff(target, "yx"), tyy = target_coeff(target, "yy"),
                     tx = target_coeff(target, "x"), ty = target_coeff(target, "y"),
                     t1 = target_coeff(target, "1");
    auto is_zero = [&](Slot s) { return zero[idx(s)] == true; };

    Quaternion a, b, A, B;
    if (!is_zero(Slot::a)) {
        a = 1;
        A = txx;
        B = txy;
        if (is_zero(Slot::b))
            b = 0;
        else if (!A.is_zero())
            b = tyx * A.inverse();
        else if (!B.is_zero())
            b = tyy * B.inverse();
        if (!(b * A == tyx && b * B == tyy))
            return PatternClosed{"with a = 1 the yx and yy coefficients force incompatible b"};
    } else {
        if (is_zero(Slot::b))
            return PatternClosed{"a = b = 0 leaves no degree-2 term"};
        b = 1;
        A = tyx;
        B = tyy;
        if (!(txx.is_zero() && txy.is_zero()))
            return PatternClosed{"a = 0 but an x-leading quadratic coefficient is nonzero"};
    }

    // aC + cA = tx, bC + cB = ty, cC = t1
    const bool c_zero = is_zero(Slot::c), C_zero = !c_zero && is_zero(Slot::C);
    const std::size_t cols = (c_zero || C_zero) ? 4 : 8;
    const std::size_t c_off = C_zero ? 0 : 4, C_off = 0;
    LinearSystem sys;
    sys.columns = cols;
    const Mat4 La = left_mul_matrix(a), Lb = left_mul_matrix(b);
    const Mat4 RA = right_mul_matrix(A), RB = right_mul_matrix(B);
    const auto tx_c = tx.components(), ty_c = ty.components();
    for (std::size_t r = 0; r < 4; ++r) {
        std::vector<Rational> rx(cols), ry(cols);
        if (!C_zero) {
            add_block(rx, C_off, La, r);
            add_block(ry, C_off, Lb, r);
        }
        if (!c_zero) {
            add_block(rx, c_off, RA, r);
            add_block(ry, c_off, RB, r);
        }
        sys.add_row(std::move(rx), tx_c[r]);
        sys.add_row(std::move(ry), ty_c[r]);
    }
    const LinearVerdict lv = solve_linear(sys);
    if (lv.kind == LinearVerdict::Kind::Infeasible)
        return PatternClosed{"x and y coefficient equations are linearly inconsistent"};
    const auto &s = *lv.solution;
    Quaternion c, C;
    if (!C_zero)
        C = {s[C_off], s[C_off + 1], s[C_off + 2], s[C_off + 3]};
    if (!c_zero)
        c = {s[c_off], s[c_off + 1], s[c_off + 2], s[c_off + 3]};
    if (!(c * C == t1)) {
        if (lv.kind == LinearVerdict::Kind::Unique || c_zero || C_zero)
            return PatternClosed{"constant coefficient c*C disagrees with the target"};
        return Inconclusive{"constant term leaves a quadratic quaternion equation on a " +
                            std::to_string(lv.kernel_dimension) + "-dimensional solution space"};
    }
    const NCPoly x = NCPoly::x(), y = NCPoly::y();
    LinearFactorization f{a * x + b * y + NCPoly::constant(c), A * x + B * y + NCPoly::constant(C)};
    ZFAC_ENSURE(nc_mul(f.left, f.right) == target, "factorization re-expands to the target");
    return f;
}

struct SearchResult {
    std::vector<CertificateBranch> closed;
    std::optional<LinearFactorization> found;
    std::optional<std::string> inconclusive;
};

struct SearchState {
    Pattern zero;
    std::vector<SlotAssumption> assumptions;
    std::vector<CertificateStep> trace;
};

void search(const NCPoly &target, std::size_t eq_index, SearchState st, SearchResult &res)
{
    if (res.found)
        return;
    if (eq_index == kProducts.size()) {
        auto outcome = solve_pattern(target, st.zero);
        if (auto *f = std::get_if<LinearFactorization>(&outcome))
            res.found = std::move(*f);
        else if (auto *inc = std::get_if<Inconclusive>(&outcome))
            res.inconclusive = inc->reason;
        else {
            CertificateBranch br;
            br.assumptions = st.assumptions;
            br.trace = st.trace;
            br.trace.push_back({"", "remaining coefficient equations",
                                std::get<PatternClosed>(outcome).reason});
            br.closure = CertificateBranch::Closure::Algebraic;
            res.closed.push_back(std::move(br));
        }
        return;
    }

    const ProductEquation &eq = kProducts[eq_index];
    const Quaternion t = target_coeff(target, eq.word);
    const std::string text = product_text(eq, t);

    auto branch_on = [&](Slot s) {
        for (bool z : {true, false}) {
            SearchState next = st;
            next.zero[idx(s)] = z;
            next.assumptions.push_back({s, z});
            next.trace.push_back({eq.word, text,
                                  "assume " + std::string(to_string(s)) + (z ? " = 0" : " != 0")});
            search(target, eq_index, std::move(next), res);
        }
    };
    auto close = [&](CertificateBranch::Closure kind, std::string why) {
        CertificateBranch br;
        br.assumptions = st.assumptions;
        br.trace = st.trace;
        br.trace.push_back({eq.word, text, std::move(why)});
        br.closure = kind;
        br.word = eq.word;
        br.left = eq.left;
        br.right = eq.right;
        res.closed.push_back(std::move(br));
    };

    const auto &zl = st.zero[idx(eq.left)];
    if (!zl)
        return branch_on(eq.left);
    if (*zl) {
        if (!t.is_zero())
            return close(CertificateBranch::Closure::ZeroProduct,
                         "contradiction: " + std::string(to_string(eq.left)) + " = 0 gives 0");
        return search(target, eq_index + 1, std::move(st), res);
    }
    const auto &zr = st.zero[idx(eq.right)];
    if (!zr)
        return branch_on(eq.right);
    if (*zr) {
        if (!t.is_zero())
            return close(CertificateBranch::Closure::ZeroProduct,
                         "contradiction: " + std::string(to_string(eq.right)) + " = 0 gives 0");
        return search(target, eq_index + 1, std::move(st), res);
    }
    if (t.is_zero())
        return close(CertificateBranch::Closure::NonzeroProduct,
                     "contradiction: product of nonzero quaternions is nonzero");
    search(target, eq_index + 1, std::move(st), res);
}

} // namespace

FactorizationOutcome prove_no_linear_factorization(const NCPoly &target)
{
    if (target.degree() != 2)
        throw UsageError("linear factorization search needs a degree-2 target");
    SearchResult res;
    search(target, 0, SearchState{}, res);
    if (res.found)
        return std::move(*res.found);
    if (res.inconclusive)
        return Inconclusive{*res.inconclusive};
    UnsatCertificate cert{std::move(res.closed)};
    ZFAC_ENSURE(check_certificate(target, cert), "certificate re-verifies");
    return cert;
}

bool check_certificate(const NCPoly &target, const UnsatCertificate &cert)
{
    if (target.degree() != 2 || cert.branches.empty())
        return false;
    auto holds = [](const CertificateBranch &br, unsigned mask) {
        for (const auto &as : br.assumptions)
            if (((mask >> idx(as.slot)) & 1u) != static_cast<unsigned>(as.zero))
                return false;
        return true;
    };
    auto assumed = [](const CertificateBranch &br, Slot s, bool zero) {
        return std::find(br.assumptions.begin(), br.assumptions.end(), SlotAssumption{s, zero}) !=
               br.assumptions.end();
    };

    for (const auto &br : cert.branches) {
        switch (br.closure) {
        case CertificateBranch::Closure::ZeroProduct:
        case CertificateBranch::Closure::NonzeroProduct: {
            const auto eq = std::find_if(kProducts.begin(), kProducts.end(), [&](const auto &e) {
                return br.word == e.word && br.left == e.left && br.right == e.right;
            });
            if (eq == kProducts.end())
                return false;
            const bool t_zero = target_coeff(target, eq->word).is_zero();
            if (br.closure == CertificateBranch::Closure::ZeroProduct) {
                if (t_zero || !(assumed(br, br.left, true) || assumed(br, br.right, true)))
                    return false;
            } else if (!t_zero || !assumed(br, br.left, false) || !assumed(br, br.right, false)) {
                return false;
            }
            break;
        }
        case CertificateBranch::Closure::Algebraic: {
            Pattern z;
            for (const auto &as : br.assumptions)
                z[idx(as.slot)] = as.zero;
            if (!std::holds_alternative<PatternClosed>(solve_pattern(target, z)))
                return false;
            break;
        }
        }
    }
    // Every zero/nonzero pattern of the six coefficients lies in exactly one
    // branch.
    for (unsigned mask = 0; mask < 64; ++mask) {
        const auto hits = std::count_if(cert.branches.begin(), cert.branches.end(),
                                        [&](const CertificateBranch &br) { return holds(br, mask); });
        if (hits != 1)
            return false;
    }
    return true;
}

// ------------------------------------------------------ zero-set agreement

AgreementReport zero_set_agreement(const NCPoly &f1, const NCPoly &f2, std::uint64_t seed,
                                   std::size_t trials)
{
    if (trials == 0)
        throw UsageError("trial count must be positive");
    AgreementReport rep;
    auto probe = [&](const QuaternionPair &pr, bool commuting) {
        const Quaternion v1 = nc_eval(f1, pr.first, pr.second);
        const Quaternion v2 = nc_eval(f2, pr.first, pr.second);
        if (v1.is_zero() != v2.is_zero())
            rep.disagreements.push_back({pr, commuting, v1, v2});
    };
    const std::array<QuaternionPair, 3> anchors{
        {{Quaternion(1), Quaternion(2)}, {Quaternion(2), Quaternion(1)}, {Quaternion(3), Quaternion(-1)}}};
    for (const auto &pr : anchors) {
        ++rep.anchor_pairs;
        probe(pr, true);
    }
    for (const auto &pr : sample_commuting(seed, trials)) {
        ++rep.commuting_pairs;
        probe(pr, true);
    }
    for (const auto &pr : sample_noncommuting(seed, trials)) {
        ++rep.generic_pairs;
        probe(pr, false);
    }
    return rep;
}

} // namespace zfac
