#pragma once

#include "verlinde/cartan.hpp"
#include "verlinde/chebyshev.hpp"
#include "verlinde/laurent.hpp"
#include "verlinde/scalars.hpp"
#include "verlinde/temperley_lieb.hpp"
#include "verlinde/tilting.hpp"

#include <json.hpp>

namespace verlinde {

using Json = nlohmann::json;

// Rounded to 12 significant digits so that output is stable across
// platforms.
Json float_json(double x);
// Native number when it fits in 64 bits, decimal string otherwise.
Json integer_json(const Integer& x);
Json integer_vector_json(const std::vector<Integer>& v);

Json field_json(const GaloisField& f);
Json scalar_json(const FieldScalar& x);
Json levels_json(const Levels& lv);
Json poly_json(const IntPoly& f);  // ascending coefficients
Json laurent_json(const LaurentPoly& f);  // [[exponent, coeff], ...]
Json tilting_json(const TiltingClass& c);
Json cartan_json(const CartanMatrix& c);
Json blocks_json(const std::vector<Block>& blocks);
Json morphism_json(const tl::Morphism& m);

}  // namespace verlinde
