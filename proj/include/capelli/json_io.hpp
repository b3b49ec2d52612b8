#ifndef CAPELLI_JSON_IO_HPP
#define CAPELLI_JSON_IO_HPP

#include <json.hpp>

#include "capelli/eigenvalues.hpp"
#include "capelli/interpolation.hpp"
#include "capelli/jordan.hpp"
#include "capelli/mpoly.hpp"
#include "capelli/partitions.hpp"
#include "capelli/rings.hpp"

namespace capelli {

using Json = nlohmann::json;

// Wire formats (keys are emitted in sorted order, so output is
// byte-stable for identical requests):
//   Rational       "p/q"                       (denominator omitted when 1)
//   Partition      [4,2,1]; the empty partition is []
//   MPoly          {"vars": [...], "terms": [{"exps": [...], "coef": "p/q"}]}
//                  with terms in canonical graded-lex order
//   RingSpec       {"kind": "SUPER_A"|"Q_TYPE", "m":, "n":, "theta": "p/q"}
//   Weight         {"basis": ["eps1",...], "coeffs": ["p/q",...]}

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json mpoly_to_json(const MPoly& p);
MPoly mpoly_from_json(const Json& j);

Json ring_spec_to_json(const RingSpec& spec);
Json weight_to_json(const Weight& w);
Json jordan_case_to_json(const JordanCase& c);

Json interpolation_result_to_json(const InterpolationResult& r);
Json capelli_report_to_json(const CapelliReport& r);
Json eigenvalue_table_to_json(const EigenvalueTable& t);

} // namespace capelli

#endif
