#include "modcurve/level_arith.hpp"

#include "modcurve/errors.hpp"

namespace modcurve {

std::string_view kind_name(SubgroupKind kind) {
  switch (kind) {
    case SubgroupKind::Full: return "GL2";
    case SubgroupKind::Borel: return "B";
    case SubgroupKind::SplitCartanNormalizer: return "Cs+";
    case SubgroupKind::NonsplitCartanNormalizer: return "Cns+";
    case SubgroupKind::E7: return "G(e7)";
  }
  return "?";
}

std::string kind_tag(SubgroupKind kind, Int p) {
  switch (kind) {
    case SubgroupKind::Full: return "full" + std::to_string(p);
    case SubgroupKind::Borel: return "b" + std::to_string(p);
    case SubgroupKind::SplitCartanNormalizer: return "s" + std::to_string(p);
    case SubgroupKind::NonsplitCartanNormalizer: return "ns" + std::to_string(p);
    case SubgroupKind::E7: return "e7";
  }
  return "?";
}

void check_kind_at(Int p, SubgroupKind kind) {
  if (!is_prime(p)) throw DataError("level structure: " + std::to_string(p) + " is not prime");
  if (kind == SubgroupKind::E7 && p != 7) {
    throw DataError("level structure: G(e7) is only defined at p = 7, not p = " + std::to_string(p));
  }
}

Int group_order(Int p, SubgroupKind kind) {
  check_kind_at(p, kind);
  switch (kind) {
    case SubgroupKind::Full: return p * (p - 1) * (p - 1) * (p + 1);
    case SubgroupKind::Borel: return p * (p - 1) * (p - 1);
    case SubgroupKind::SplitCartanNormalizer: return 2 * (p - 1) * (p - 1);
    case SubgroupKind::NonsplitCartanNormalizer: return 2 * (p * p - 1);
    case SubgroupKind::E7: return 48;
  }
  throw DataError("unknown subgroup kind");
}

Int local_index(Int p, SubgroupKind kind) {
  const Int full = group_order(p, SubgroupKind::Full);
  const Int sub = group_order(p, kind);
  if (full % sub != 0) {
    throw CertificateError("order of " + std::string(kind_name(kind)) + " at p = " + std::to_string(p) +
                           " does not divide |GL2(F_p)|");
  }
  return full / sub;
}

void LevelStructure::set(Int p, SubgroupKind kind) {
  check_kind_at(p, kind);
  if (local_.contains(p)) {
    throw DataError("level structure: prime " + std::to_string(p) + " given twice");
  }
  if (kind != SubgroupKind::Full) local_.emplace(p, kind);
}

SubgroupKind LevelStructure::at(Int p) const {
  auto it = local_.find(p);
  return it == local_.end() ? SubgroupKind::Full : it->second;
}

std::vector<Int> LevelStructure::support() const {
  std::vector<Int> out;
  for (const auto& [p, kind] : local_) out.push_back(p);
  return out;
}

std::string LevelStructure::tags() const {
  std::string out;
  for (const auto& [p, kind] : local_) {
    if (!out.empty()) out += ',';
    out += kind_tag(kind, p);
  }
  return out;
}

Int psl2_index(const LevelStructure& ls) {
  Int index = 1;
  for (const auto& [p, kind] : ls.entries()) {
    // GL2(Z) and PSL2(Z) indices agree only when -I is in the level subgroup.
    if (!contains_minus_identity(kind)) throw DataError("level subgroup without -I: PSL2 index differs");
    index *= local_index(p, kind);
  }
  return index;
}

}  // namespace modcurve
