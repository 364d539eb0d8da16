#ifndef ZFAC_REPORT_HPP
#define ZFAC_REPORT_HPP

#include <json.hpp>

#include <zfac/bipoly.hpp>
#include <zfac/linear.hpp>
#include <zfac/ncquat.hpp>
#include <zfac/pipeline.hpp>
#include <zfac/zeroset.hpp>

// JSON views of result types. Rationals are "num/den" strings, polynomials
// their canonical printed form, NegInfinity degrees the string "-inf".
namespace zfac::report {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json degree(int d);
json rational(const Rational &r);
json interval(const RootInterval &iv);
json quaternion(const Quaternion &q);

json to_json(const DivisionResult &d);
json to_json(const ClearedDivision &c);
json to_json(const WitnessReport &w);
json to_json(const ParityClass &pc);
json to_json(const ZeroSetSample &z);
json to_json(const FactorReport &r);
json to_json(const LinearSystem &s);
json to_json(const LinearVerdict &v);
json to_json(const DivisibilityVerdict &v);
json to_json(const UnsatCertificate &c);
json to_json(const FactorizationOutcome &o);
json to_json(const AgreementReport &a);

} // namespace zfac::report

#endif
