#include "verlinde/json_io.hpp"

#include <cstdio>
#include <limits>
#include <string>

namespace verlinde {

Json float_json(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  double r = std::stod(buf);
  if (r == 0) r = 0;  // drop negative zero
  return r;
}

Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

Json integer_vector_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

Json field_json(const GaloisField& f) {
  return Json{{"p", f.characteristic()}, {"degree", f.degree()}, {"modulus", f.modulus()}};
}

Json scalar_json(const FieldScalar& x) {
  return Json{{"coords", x.coordinates()}, {"modulus", x.field().modulus()}};
}

Json levels_json(const Levels& lv) { return Json{{"p", lv.p}, {"ell", lv.ell}, {"n", lv.n}}; }

Json poly_json(const IntPoly& f) { return integer_vector_json(f.coeffs()); }

Json laurent_json(const LaurentPoly& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) out.push_back(Json::array({e, integer_json(c)}));
  return out;
}

Json tilting_json(const TiltingClass& c) {
  Json out = Json::array();
  for (const auto& [w, m] : c.summands) out.push_back(Json{{"weight", w}, {"multiplicity", integer_json(m)}});
  return out;
}

Json cartan_json(const CartanMatrix& c) {
  const auto D = static_cast<std::int64_t>(c.entries.size());
  return Json{{"first", c.first}, {"last", c.first + D - 1}, {"matrix", c.entries}};
}

Json blocks_json(const std::vector<Block>& blocks) {
  Json sizes = Json::object();
  for (const auto& [size, count] : block_census(blocks)) sizes[std::to_string(size)] = count;
  return Json{{"blocks", blocks.size()}, {"sizes", sizes}, {"partition", blocks}};
}

Json morphism_json(const tl::Morphism& m) {
  Json terms = Json::array();
  for (const auto& [d, c] : m.terms) {
    Json pairs = Json::array();
    for (const auto& [x, y] : d.pairs())
      pairs.push_back(Json::array({Json{{"top", x.top}, {"pos", x.pos}}, Json{{"top", y.top}, {"pos", y.pos}}}));
    terms.push_back(Json{{"pairs", pairs}, {"coeff", c.coordinates()}});
  }
  Json out{{"bottom", m.bottom}, {"top", m.top}, {"terms", terms}};
  if (!m.terms.empty()) out["field"] = field_json(m.terms.begin()->second.field());
  return out;
}

}  // namespace verlinde
