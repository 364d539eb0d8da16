#ifndef ZFAC_NCQUAT_HPP
#define ZFAC_NCQUAT_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <zfac/linear.hpp>
#include <zfac/ncpoly.hpp>
#include <zfac/quaternion.hpp>

namespace zfac {

using QuaternionPair = std::pair<Quaternion, Quaternion>;

// Pairs (alpha + beta u, gamma + delta u) sharing a pure imaginary u, all
// parts drawn from the integer grid [-5, 5]. Every pair commutes.
std::vector<QuaternionPair> sample_commuting(std::uint64_t seed, std::size_t count);
// Pairs with all parts drawn from [-5, 5], commuting draws rejected.
std::vector<QuaternionPair> sample_noncommuting(std::uint64_t seed, std::size_t count);

// Matrices of q * c and c * q acting on the components (w, x, y, z) of c.
using Mat4 = std::array<std::array<Rational, 4>, 4>;
Mat4 left_mul_matrix(const Quaternion &q);
Mat4 right_mul_matrix(const Quaternion &q);

// Right: g = p * h (h multiplies on the right). Left: g = h * p.
enum class Side { Left, Right };

std::string_view to_string(Side s);

struct DivisibilityVerdict {
    Side side = Side::Right;
    std::optional<NCPoly> quotient;
    std::optional<LinearSystem> infeasible_system;
    // "<word>.<component>" per system row, and "<word>.<component>" per column.
    std::vector<std::string> row_labels;
    std::vector<std::string> column_labels;
};

// Matches word coefficients of p*h (or h*p) against g for an unknown h of
// degree deg g - deg p. UsageError unless deg p >= 1.
DivisibilityVerdict one_sided_divide(const NCPoly &g, const NCPoly &p, Side side);

// Coefficients of the two linear factors (a x + b y + c)(A x + B y + C).
enum class Slot { a, b, c, A, B, C };

std::string_view to_string(Slot s);

struct SlotAssumption {
    Slot slot;
    bool zero;
    friend bool operator==(const SlotAssumption &, const SlotAssumption &) = default;
};

struct CertificateStep {
    std::string word;     // word whose coefficient equation is consulted
    std::string equation; // e.g. "a*B = 1"
    std::string decision; // branch taken or conclusion drawn
};

struct CertificateBranch {
    enum class Closure {
        ZeroProduct,    // l*r = t != 0 but l or r is assumed zero
        NonzeroProduct, // l*r = 0 but both assumed nonzero (no zero divisors)
        Algebraic       // remaining coefficient equations are inconsistent
    };

    std::vector<SlotAssumption> assumptions;
    std::vector<CertificateStep> trace;
    Closure closure = Closure::ZeroProduct;
    // For the product closures: the equation l*r = target[word].
    std::string word;
    Slot left = Slot::a;
    Slot right = Slot::A;
};

std::string_view to_string(CertificateBranch::Closure c);

struct UnsatCertificate {
    std::vector<CertificateBranch> branches;
};

struct LinearFactorization {
    NCPoly left;
    NCPoly right;
};

// Reached only when a branch leaves a genuinely quadratic quaternion equation.
struct Inconclusive {
    std::string reason;
};

using FactorizationOutcome = std::variant<UnsatCertificate, LinearFactorization, Inconclusive>;

// Decides whether a degree-2 target is a product of two linear factors by a
// zero / nonzero case split on the factor coefficients. UsageError unless
// deg target = 2.
FactorizationOutcome prove_no_linear_factorization(const NCPoly &target);

// Re-verifies a certificate from scratch: the branches partition every
// zero/nonzero pattern of the six coefficients and each one is closed.
bool check_certificate(const NCPoly &target, const UnsatCertificate &cert);

struct Disagreement {
    QuaternionPair pair;
    bool commuting = false;
    Quaternion f1_value;
    Quaternion f2_value;
};

struct AgreementReport {
    std::size_t anchor_pairs = 0;
    std::size_t commuting_pairs = 0;
    std::size_t generic_pairs = 0;
    std::vector<Disagreement> disagreements;
};

// Evaluates both polynomials on a few fixed real pairs, `trials` commuting
// pairs and `trials` non-commuting pairs; reports pairs where exactly one of
// them vanishes.
AgreementReport zero_set_agreement(const NCPoly &f1, const NCPoly &f2, std::uint64_t seed,
                                   std::size_t trials);

} // namespace zfac

#endif
