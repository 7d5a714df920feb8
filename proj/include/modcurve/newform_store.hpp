#pragma once

// Metadata for weight-2, trivial-character newforms (one record per Galois
// orbit) and the fixture file format.
//
// Fixture schema, a top-level JSON array of
//   {"label": "105.2.a.a", "level": 105, "dim": 1, "analytic_rank": 0,
//    "atkin_lehner": {"3": -1, "5": -1, "7": -1}}
// where "atkin_lehner" maps a decimal prime p | level to the eigenvalue of
// w_{p^{v_p(level)}} on the form. Primes may be omitted when unknown.

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modcurve/number_theory.hpp"

namespace modcurve {

struct Newform {
  std::string label;
  Int level = 0;
  Int hecke_degree = 0;  // [E_f : Q] = dim A_f
  Int analytic_rank = 0;
  std::map<Int, int> fricke_signs;

  /// Sign at p if recorded.
  std::optional<int> fricke_sign(Int p) const;

  bool operator==(const Newform&) const = default;
};

/// Throws DataError when a record violates the schema invariants.
void validate(const Newform& f);

class NewformSet {
 public:
  NewformSet() = default;

  /// Validates every form and rejects duplicate labels. Forms are kept
  /// ordered by (level, label).
  explicit NewformSet(std::vector<Newform> forms);

  std::span<const Newform> forms() const { return forms_; }
  std::size_t size() const { return forms_.size(); }
  bool empty() const { return forms_.empty(); }
  const Newform* find(std::string_view label) const;

  /// True when the set holds every newform of level dividing n: the sum of
  /// dim * tau(n/M) must equal the genus of X_0(n).
  bool is_complete_for(Int n) const;

  /// Throws DataError naming the shortfall when !is_complete_for(n).
  void require_complete_for(Int n) const;

  /// Union by label; a label present in both must carry identical data.
  NewformSet merged_with(const NewformSet& other) const;

  bool operator==(const NewformSet&) const = default;

 private:
  std::vector<Newform> forms_;
};

/// Orders labels the way LMFDB does within a level ("z" < "ba").
bool label_less(std::string_view a, std::string_view b);

NewformSet load_fixtures(std::string_view json_text);
NewformSet load_fixtures(std::istream& in);
NewformSet load_fixture_file(const std::string& path);

/// Fixture compiled into the library (levels dividing 315 and 735).
const NewformSet& bundled_fixtures();
std::string_view bundled_fixture_text();

/// Canonical fixture JSON: 2-space indent, schema key order, trailing newline.
std::string serialize(const NewformSet& set);

/// All forms with level | n, ordered by (level, label).
std::vector<Newform> forms_of_level_dividing(const NewformSet& set, Int n);

/// Genus of X_0(n) from the index, elliptic-point and cusp counts. Used as the
/// independent completeness check for newform sets.
Int classical_genus_X0(Int n);

}  // namespace modcurve
