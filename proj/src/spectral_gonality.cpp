#include "modcurve/spectral_gonality.hpp"

#include <charconv>

#include "modcurve/errors.hpp"

namespace modcurve {

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int parse_int(std::string_view text) {
  Int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw DataError("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

Int ceil(const Rational& r) { return -floor_div(-r.numerator(), r.denominator()); }

std::string to_decimal(const Rational& r, int places) {
  const Int scale = ipow(10, places);
  // round half away from zero on |r| * scale
  const Int num = r.numerator() < 0 ? -r.numerator() : r.numerator();
  const Int den = r.denominator();
  const Int scaled = (2 * num * scale + den) / (2 * den);
  std::string digits = std::to_string(scaled / scale);
  if (places > 0) {
    std::string frac = std::to_string(scaled % scale);
    digits += '.' + std::string(static_cast<std::size_t>(places) - frac.size(), '0') + frac;
  }
  return (r.numerator() < 0 && scaled != 0 ? "-" : "") + digits;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw DataError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

SpectralConstant SpectralConstant::custom(Rational value) {
  if (value.numerator() <= 0) throw DataError("spectral constant must be positive, got " + to_string(value));
  return {Kind::Custom, value};
}

SpectralConstant SpectralConstant::parse(std::string_view name) {
  if (name == "lrs") return lrs();
  if (name == "kim-sarnak") return kim_sarnak();
  if (name == "selberg") return selberg();
  return custom(parse_rational(name));
}

std::string SpectralConstant::name() const {
  switch (kind_) {
    case Kind::LRS: return "lrs";
    case Kind::KimSarnak: return "kim-sarnak";
    case Kind::Selberg: return "selberg";
    case Kind::Custom: return to_string(value_);
  }
  return "?";
}

Rational gonality_lower_bound(Int index, const SpectralConstant& c) {
  if (index < 1) throw DataError("index must be positive");
  return c.value() * index / Int{24};
}

Int integer_gonality_bound(Int index, const SpectralConstant& c) { return ceil(gonality_lower_bound(index, c)); }

Int castelnuovo_severi_max_genus(Int g2, Int g3, Int deg_f, Int deg_g) {
  if (deg_f < 1 || deg_g < 1) throw DataError("Castelnuovo-Severi: degrees must be positive");
  return g2 * deg_f + g3 * deg_g + (deg_f - 1) * (deg_g - 1);
}

Int min_nonfactoring_degree(Int g_curve, Int g_quotient) { return g_curve - 2 * g_quotient + 1; }

NoMapCertificate no_degree_d_map_certificate(Int g_curve, Int g_quotient, Int degree) {
  NoMapCertificate cert;
  cert.g_curve = g_curve;
  cert.g_quotient = g_quotient;
  cert.degree = degree;
  cert.min_nonfactoring = min_nonfactoring_degree(g_curve, g_quotient);
  cert.odd_degree = degree % 2 != 0;
  cert.holds = cert.odd_degree && degree < cert.min_nonfactoring;
  return cert;
}

Int riemann_hurwitz_double_cover_genus(Int g_base, Int num_branch) {
  if (num_branch < 0 || num_branch % 2 != 0) {
    throw DataError("double cover needs an even, nonnegative number of branch points");
  }
  // 2g - 2 = 2(2 g_base - 2) + num_branch
  const Int genus = (2 * (2 * g_base - 2) + num_branch) / 2 + 1;
  if (genus < 0) throw DataError("Riemann-Hurwitz gives negative genus");
  return genus;
}

bool abramovich_frey_finite(Int integer_gonality_bound, Int d) { return integer_gonality_bound > 2 * d; }

}  // namespace modcurve
