#pragma once

#include <string>

#include "eiscalc/cone_series.hpp"
#include "eiscalc/curve.hpp"
#include "eiscalc/rootdata.hpp"
#include "eiscalc/scalar.hpp"

namespace eiscalc {

/*
  Exact scalar literals: "a" or "a+b*r" with rational a, b and r the
  formal square root of q, e.g. "3/2+1/2*r" or "-2*r".
*/
std::string scalar_str(const Scalar& s);
Scalar parse_scalar(const std::string& text, long q);

// character lists like "3,1/2" (one rational or scalar literal per slot)
UnramifiedCharacter parse_character(const std::string& text, long q);

std::string datum_record(const BasedRootDatum& d);
std::string series_json(const ConeSeries& s);

}  // namespace eiscalc
