#ifndef WITT_JSON_IO_HPP
#define WITT_JSON_IO_HPP

#include <string_view>

#include "json.hpp"
#include "witt/dloc.hpp"
#include "witt/localfn.hpp"
#include "witt/subalg.hpp"
#include "witt/weyl.hpp"

namespace witt {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ParseError with the byte offset.
Json parse_json(std::string_view s);

// Rationals travel as strings ("3/4"); plain JSON integers are accepted on input.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const OnePointLocal& p);
Json to_json(const LocalFunction& chi);
LocalFunction local_function_from_json(const Json& j);

Json to_json(const FactoredPoly& f);
FactoredPoly factored_from_json(const Json& j);

Json to_json(const SubalgebraPresentation& k);
SubalgebraPresentation presentation_from_json(const Json& j);

Json to_json(const ClassificationCode& c);
ClassificationCode classification_from_json(const Json& j);

Json to_json(const NVector& v);
NVector nvector_from_json(const Json& j);

Json to_json(const JetQ& s);
Json to_json(const CanonicalForm& cf);
Json to_json(const OrbitInvariant& inv);
Json to_json(const ZExpression& e);

}  // namespace witt

#endif
