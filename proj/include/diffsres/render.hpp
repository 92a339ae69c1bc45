#pragma once

#include <string>

#include "diffsres/spectral.hpp"
#include "json.hpp"

namespace diffsres {

using Json = nlohmann::ordered_json;

Json to_json(const Element& e);
// {"order", "coefficients" (ascending), "domain"}; order is null for 0.
Json to_json(const Odo& a);
Json to_json(const DiffMatrix& m);
Json to_json(const SubresultantRecord& r);
Json to_json(const BezoutPair& b, const Element& resultant);
Json to_json(const CommutingPair& pair, const CurveGcrd& g);

std::string latex_symbol(Symbol s);
std::string to_latex(const MultiPoly& p);
std::string to_latex(const Element& e);
std::string to_latex(const Odo& a);
std::string to_latex(const DiffMatrix& m);

}  // namespace diffsres
