#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigcert/poly.hpp"

namespace trigcert {

// Resolve a bound name. Fixed names cover the printed reference polynomials;
// patterned names cover the parametric families:
//   T<n>L(<series>) / T<n>U(<series>)   truncation bounds
//   W<n>L(cot)                          two-point cot lower bounds (n odd)
//   F<n> / SF<n>                        remainder bounds in t (n odd)
std::optional<bound_poly> lookup_bound(const std::string& name);

// Fixed catalog names, for listings.
std::vector<std::string> catalog_names();

}  // namespace trigcert
