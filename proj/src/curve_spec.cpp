#include "modcurve/curve_spec.hpp"

#include <cctype>

#include "modcurve/errors.hpp"

namespace modcurve {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw DataError("parse error at position " + std::to_string(pos_) + " in '" + std::string(text_) + "': " + what);
  }

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  Int number() {
    const std::size_t start = pos_;
    Int v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000'000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  std::size_t pos() const { return pos_; }
  void reset(std::size_t p) { pos_ = p; }

  void tag(LevelStructure& ls) {
    const std::size_t start = pos_;
    SubgroupKind kind;
    Int p = 0;
    if (accept("e7")) {
      kind = SubgroupKind::E7;
      p = 7;
    } else if (accept("ns")) {
      kind = SubgroupKind::NonsplitCartanNormalizer;
      p = number();
    } else if (accept("b")) {
      kind = SubgroupKind::Borel;
      p = number();
    } else if (accept("s")) {
      kind = SubgroupKind::SplitCartanNormalizer;
      p = number();
    } else {
      fail("expected a level tag (bP, sP, nsP or e7)");
    }
    try {
      ls.set(p, kind);
    } catch (const DataError& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  LevelStructure tags() {
    LevelStructure ls;
    tag(ls);
    while (accept(",")) tag(ls);
    return ls;
  }

  std::vector<Int> quotient() {
    std::vector<Int> qs;
    if (accept("<")) {
      expect("w");
      qs.push_back(number());
      while (accept(",")) {
        expect("w");
        qs.push_back(number());
      }
      expect(">");
    } else {
      expect("w");
      qs.push_back(number());
    }
    return qs;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

LevelStructure borel_level(Parser& ps, Int n) {
  LevelStructure ls;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) ps.fail("X0(" + std::to_string(n) + ") is not a product of Borel level structures (not squarefree)");
    ls.set(p, SubgroupKind::Borel);
  }
  return ls;
}

// Level part shared by both grammars. Returns x0 level when "X0(N)" was used.
std::optional<Int> levels(Parser& ps, LevelStructure& out, bool allow_alias) {
  if (ps.accept("X0(")) {
    const Int n = ps.number();
    if (n < 1) ps.fail("level must be positive");
    ps.expect(")");
    return n;
  }
  if (allow_alias) {
    const std::size_t save = ps.pos();
    if (ps.accept("ns7") && (ps.done() || ps.peek() == '/')) {
      out.set(3, SubgroupKind::Borel);
      out.set(5, SubgroupKind::Borel);
      out.set(7, SubgroupKind::NonsplitCartanNormalizer);
      return std::nullopt;
    }
    ps.reset(save);
  }
  if (ps.accept("X(")) {
    out = ps.tags();
    ps.expect(")");
  } else {
    out = ps.tags();
  }
  return std::nullopt;
}

std::string quotient_suffix(const std::vector<Int>& qs) {
  if (qs.empty()) return "";
  std::string inner;
  for (Int q : qs) inner += (inner.empty() ? "w" : ",w") + std::to_string(q);
  return "/" + (qs.size() == 1 ? inner : "<" + inner + ">");
}

// Prime set of w_Q at ambient level n; v_p(Q) may be 1 or v_p(n).
std::vector<Int> involution_primes(Int n, Int q, const std::string& curve) {
  if (q < 2) throw DataError(curve + ": w" + std::to_string(q) + " is not an involution");
  std::vector<Int> primes;
  for (auto [p, e] : factorize(q)) {
    const int full = n % p == 0 ? valuation(n, p) : 0;
    if (full == 0 || (e != 1 && e != full)) {
      throw DataError(curve + ": w" + std::to_string(q) + " is not a product of full prime-power parts of level " +
                      std::to_string(n));
    }
    primes.push_back(p);
  }
  return primes;
}

}  // namespace

LevelStructure parse_level_spec(std::string_view text) {
  Parser ps(text);
  LevelStructure ls;
  if (auto n = levels(ps, ls, false)) ls = borel_level(ps, *n);
  if (!ps.done()) ps.fail("unexpected trailing input");
  return ls;
}

CurveSpec parse_curve_spec(std::string_view text) {
  Parser ps(text);
  CurveSpec spec;
  spec.x0_level = levels(ps, spec.level, true);
  if (ps.accept("/")) spec.quotient = ps.quotient();
  if (!ps.done()) ps.fail("unexpected trailing input");
  return spec;
}

std::string curve_name(const CurveSpec& spec) {
  const std::string base =
      spec.x0_level ? "X0(" + std::to_string(*spec.x0_level) + ")" : "X(" + spec.level.tags() + ")";
  return base + quotient_suffix(spec.quotient);
}

ResolvedCurve resolve_curve(const CurveSpec& spec, const NewformSet& set) {
  ResolvedCurve out;
  out.name = curve_name(spec);

  bool chen = false;
  Int ambient = 1;
  std::vector<std::vector<Int>> gens;
  if (spec.x0_level) {
    ambient = *spec.x0_level;
  } else {
    for (const auto& [p, kind] : spec.level.entries()) {
      switch (kind) {
        case SubgroupKind::Borel: ambient *= p; break;
        case SubgroupKind::SplitCartanNormalizer:
          // X(sP, ...) = X0(P^2 ...)/w_{P^2}
          ambient *= p * p;
          gens.push_back({p});
          break;
        case SubgroupKind::NonsplitCartanNormalizer: chen = true; break;
        case SubgroupKind::E7:
          throw DataError(out.name + ": genus and Jacobian of G(e7) curves are not computed");
        case SubgroupKind::Full: break;
      }
    }
  }

  if (chen) {
    LevelStructure ns7;
    ns7.set(3, SubgroupKind::Borel);
    ns7.set(5, SubgroupKind::Borel);
    ns7.set(7, SubgroupKind::NonsplitCartanNormalizer);
    if (!(spec.level == ns7)) {
      throw DataError(out.name + ": non-split Cartan level is only supported for X(b3,b5,ns7)");
    }
    ChenCharacter chi;
    for (Int q : spec.quotient) {
      if (q != 3 && q != 5) throw DataError(out.name + ": only w3 and w5 act compatibly on X(b3,b5,ns7)");
      if (!chi.emplace(q, 1).second) throw DataError(out.name + ": w" + std::to_string(q) + " given twice");
    }
    out.jacobian = chen_ns7_decomposition(set, chi);
    out.jacobian.curve = out.name;
    out.model = "Jac X(b3,b5,ns7) x J0(105) ~ Jac X0(735)/w49 x J0(15)";
    if (!chi.empty()) out.model += ", restricted to the " + quotient_suffix(spec.quotient).substr(1) + " = +1 part";
    out.genus = total_dimension(out.jacobian);
    return out;
  }

  for (Int q : spec.quotient) gens.push_back(involution_primes(ambient, q, out.name));
  const ALSubgroup w(ambient, gens);
  out.jacobian = w.rank() == 0 ? jacobian_X0(ambient, set) : jacobian_al_quotient(ambient, set, w);
  out.jacobian.curve = out.name;
  out.model = "X0(" + std::to_string(ambient) + ")" + (w.rank() == 0 ? "" : "/" + w.name());
  out.genus = total_dimension(out.jacobian);
  return out;
}

}  // namespace modcurve
