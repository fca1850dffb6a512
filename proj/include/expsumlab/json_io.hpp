#pragma once

#include <string>

#include <json.hpp>

#include "expsumlab/expsum.hpp"
#include "expsumlab/lfun.hpp"
#include "expsumlab/padic.hpp"
#include "expsumlab/predict.hpp"

namespace expsumlab {

using Json = nlohmann::ordered_json;

/// Integers that fit in int64 become JSON numbers, larger ones strings.
Json big_to_json(const mpz_class& z);
mpz_class big_from_json(const Json& j);
std::string rational_string(const mpq_class& q);
/// Accepts an integer, or a string "a" / "a/b".
mpq_class rational_from_json(const Json& j);

Json to_json(const CyclotomicInt& v);
Json to_json(const CyclotomicRat& v);  ///< [[num, den] per coordinate]
Json to_json(const CycPoly& poly);     ///< one entry per t-degree
Json to_json(const LSeries& l);
/// [{m, coords}, ...]
Json sums_to_json(const PowerSumSequence& seq);
Json to_json(const Prediction& pr);
Json to_json(const FermatReport& r);
Json to_json(const RadiusProfile& profile);

FieldPtr field_from_json(const Json& j);
VarietySpec variety_from_json(const Json& j, const FieldCtx& base);
ChernSpec chern_from_json(const Json& j);
CurveSpec curve_from_json(const Json& j);
BettiSpec betti_from_json(const Json& j);
NewtonSpec newton_from_json(const Json& j);
/// A Q(pi) scalar: a rational, or an array [a_0, a_1, ...] meaning sum a_i pi^i.
PiNumber pi_number_from_json(const Json& j, std::uint32_t p);
/// Either a list of terms {coeff, power} with power of any sign, or an
/// object {numerator, denominator} of coefficient lists (lowest degree first).
RationalFunctionPi rational_function_from_json(const Json& j, std::uint32_t p);

}  // namespace expsumlab
