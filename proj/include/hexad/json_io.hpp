/**
 * JSON encodings of the library's values.
 *
 * Output uses ordered objects so key order, and hence the emitted bytes,
 * depend only on the value.  Decoders throw std::invalid_argument on
 * malformed input.
 */

#ifndef HEXAD_JSON_IO_HPP
#define HEXAD_JSON_IO_HPP

#include <json.hpp>

#include "hexad/galois.hpp"
#include "hexad/generation.hpp"
#include "hexad/picard.hpp"
#include "hexad/tilting.hpp"
#include "hexad/toric.hpp"
#include "hexad/vanishing.hpp"

namespace hexad::json {

using Json = nlohmann::ordered_json;

/// {"basis": tag, "coeffs": [b0, b1, b2, b3]}
Json pic_class(const PicClass& d);
PicClass pic_class_from(const Json& j);

/// Bare coefficient array, for compact bulk output.
Json coeffs(const PicClass& d);
PicClass coeffs_from(const Json& j);

Json ray_divisor(const RayDivisor& a);
Json character(const Character& m);
Json cohomology(const CohomologyTriple& h);
Json int_matrix(const IntMatrix& m);
Json symmetry(const HexSymmetry& g);

Json goodness_certificate(const GoodnessCertificate& c);
GoodnessCertificate goodness_certificate_from(const Json& j);

Json difference_class(const DifferenceClass& c);

Json atom(const Atom& a);
Atom atom_from(const Json& j);

Json rule_params(const RuleParams& p);
RuleParams rule_params_from(const Json& j);

Json generation_certificate(const GenerationCertificate& c);
GenerationCertificate generation_certificate_from(const Json& j);

Json subgroup_report(const SubgroupReport& r);

Line line_from(const Json& j);

}   // namespace hexad::json

#endif
