#pragma once

// Orders of the level subgroups of GL2(F_p) used by the curves X(b3,b5,b7),
// X(s3,b5,b7), X(b3,b5,ns7), X(b3,b5,e7), X(s3,b5,e7), and the index of a
// product level structure.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "modcurve/number_theory.hpp"

namespace modcurve {

enum class SubgroupKind {
  Full,
  Borel,                     // B(p), tag "bP"
  SplitCartanNormalizer,     // C_s^+(p), tag "sP"
  NonsplitCartanNormalizer,  // C_ns^+(p), tag "nsP"
  E7,                        // G(e7) inside GL2(F_7), order 48, tag "e7"
};

std::string_view kind_name(SubgroupKind kind);

/// Short tag used in curve names, e.g. ("b", 3) -> "b3".
std::string kind_tag(SubgroupKind kind, Int p);

/// Every kind listed above contains -I, so the index in GL2(Z) equals the
/// index in PSL2(Z). Kept as an explicit predicate so psl2_index can assert it.
constexpr bool contains_minus_identity(SubgroupKind) { return true; }

/// Throws DataError if p is not prime or kind is E7 with p != 7.
void check_kind_at(Int p, SubgroupKind kind);

Int group_order(Int p, SubgroupKind kind);

/// [GL2(F_p) : H]; the division is checked to be exact.
Int local_index(Int p, SubgroupKind kind);

class LevelStructure {
 public:
  LevelStructure() = default;

  /// Throws DataError on a non-prime key, E7 away from 7, or a repeated prime.
  void set(Int p, SubgroupKind kind);

  /// Kind at p; primes never set are Full.
  SubgroupKind at(Int p) const;

  /// Primes with a non-Full kind, ascending.
  std::vector<Int> support() const;

  const std::map<Int, SubgroupKind>& entries() const { return local_; }

  /// Comma separated tags in prime order, e.g. "s3,b5,e7".
  std::string tags() const;

  bool operator==(const LevelStructure&) const = default;

 private:
  std::map<Int, SubgroupKind> local_;
};

/// Product of local indices; equals [PSL2(Z) : Gamma] for these kinds.
Int psl2_index(const LevelStructure& ls);

}  // namespace modcurve
