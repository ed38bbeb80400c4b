#pragma once

// Reference computations that share no code path with the library routines
// they check.

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <optional>
#include <sstream>
#include <string>

#include "edgetess/edgetess.hpp"

namespace edgetess::testing {

/// Sign of c1 + c2 sqrt2 + c3 sqrt3 + c6 sqrt6 from fixed 50-decimal-digit
/// enclosures of the radicals; nullopt if the enclosure straddles zero.
inline std::optional<int> decimal_enclosure_sign(const ExtScalar& x) {
  mpz_class ten50;
  mpz_ui_pow_ui(ten50.get_mpz_t(), 10, 50);
  auto root = [&](unsigned long n) {
    mpz_class r;
    mpz_class s = n * ten50 * ten50;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    return std::pair<Rational, Rational>{Rational(r, ten50), Rational(r + 1, ten50)};
  };
  Rational lo = x.c1(), hi = x.c1();
  const std::pair<const Rational*, std::pair<Rational, Rational>> terms[] = {
      {&x.c2(), root(2)}, {&x.c3(), root(3)}, {&x.c6(), root(6)}};
  for (const auto& [c, r] : terms) {
    Rational a = *c * r.first, b = *c * r.second;
    lo += a < b ? a : b;
    hi += a < b ? b : a;
  }
  if (lo > 0) return 1;
  if (hi < 0) return -1;
  if (lo == 0 && hi == 0) return 0;
  return std::nullopt;
}

/// Angle from u to v by brute force: the multiple of 15 in (0, 360) whose
/// exact rotation of u is a positive multiple of v.
inline std::optional<int> rotation_search_angle(const Vec2& u, const Vec2& v) {
  for (int deg = 15; deg < 360; deg += 15) {
    const Vec2 ru = rotation_degrees(deg).apply(u);
    const ExtScalar c = ru.dx * v.dy - ru.dy * v.dx;
    const ExtScalar d = ru.dx * v.dx + ru.dy * v.dy;
    if (c.is_zero() && d.sign() > 0) return deg;
  }
  return std::nullopt;
}

/// Well-formed XML according to Boost.PropertyTree's parser.
inline bool xml_well_formed(const std::string& text, boost::property_tree::ptree* tree = nullptr) {
  std::istringstream in(text);
  boost::property_tree::ptree pt;
  try {
    boost::property_tree::read_xml(in, pt);
  } catch (const boost::property_tree::xml_parser_error&) {
    return false;
  }
  if (tree) *tree = std::move(pt);
  return true;
}

/// Number of <path> children under svg/g.
inline std::size_t svg_path_count(const std::string& text) {
  boost::property_tree::ptree pt;
  if (!xml_well_formed(text, &pt)) return 0;
  std::size_t n = 0;
  for (const auto& [name, child] : pt.get_child("svg")) {
    if (name != "g") continue;
    for (const auto& [inner, _] : child)
      if (inner == "path") ++n;
  }
  return n;
}

}  // namespace edgetess::testing
