#include "modcurve/newform_store.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <iterator>
#include <numeric>
#include "json.hpp"

#include "modcurve/errors.hpp"

namespace modcurve {

namespace detail {
extern const std::string_view kBundledFixture;
}

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

bool form_less(const Newform& a, const Newform& b) {
  if (a.level != b.level) return a.level < b.level;
  return label_less(a.label, b.label);
}

Int euler_phi(Int n) {
  Int phi = n;
  for (Int p : prime_divisors(n)) phi = phi / p * (p - 1);
  return phi;
}

Int get_int(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw DataError(where + ": missing field \"" + key + "\"");
  if (!it->is_number_integer()) throw DataError(where + ": field \"" + key + "\" must be an integer");
  return it->get<Int>();
}

Newform parse_form(const json& obj, std::size_t index) {
  std::string where = "fixture entry " + std::to_string(index);
  if (!obj.is_object()) throw DataError(where + ": expected an object");
  Newform f;
  auto label = obj.find("label");
  if (label == obj.end() || !label->is_string()) throw DataError(where + ": missing string field \"label\"");
  f.label = label->get<std::string>();
  where += " (" + f.label + ")";
  f.level = get_int(obj, "level", where);
  f.hecke_degree = get_int(obj, "dim", where);
  f.analytic_rank = get_int(obj, "analytic_rank", where);
  auto al = obj.find("atkin_lehner");
  if (al == obj.end() || !al->is_object()) throw DataError(where + ": missing object field \"atkin_lehner\"");
  for (const auto& [key, value] : al->items()) {
    Int p = 0;
    try {
      std::size_t used = 0;
      p = std::stoll(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw DataError(where + ": atkin_lehner key \"" + key + "\" is not a decimal prime");
    }
    if (!value.is_number_integer()) throw DataError(where + ": atkin_lehner value at " + key + " must be +1 or -1");
    f.fricke_signs[p] = value.get<int>();
  }
  for (const auto& [key, value] : obj.items()) {
    if (key != "label" && key != "level" && key != "dim" && key != "analytic_rank" && key != "atkin_lehner") {
      throw DataError(where + ": unknown field \"" + key + "\"");
    }
  }
  try {
    validate(f);
  } catch (const DataError& e) {
    throw DataError(where + ": " + e.what());
  }
  return f;
}

}  // namespace

std::optional<int> Newform::fricke_sign(Int p) const {
  auto it = fricke_signs.find(p);
  if (it == fricke_signs.end()) return std::nullopt;
  return it->second;
}

void validate(const Newform& f) {
  if (f.level < 1) throw DataError("level must be positive");
  if (f.hecke_degree < 1) throw DataError("dim must be at least 1");
  if (f.analytic_rank < 0) throw DataError("analytic_rank must be nonnegative");
  const std::string prefix = std::to_string(f.level) + ".2.a.";
  const bool suffix_ok = f.label.size() > prefix.size() &&
                         std::all_of(f.label.begin() + static_cast<std::ptrdiff_t>(prefix.size()), f.label.end(),
                                     [](char c) { return c >= 'a' && c <= 'z'; });
  if (f.label.rfind(prefix, 0) != 0 || !suffix_ok) {
    throw DataError("label \"" + f.label + "\" does not match level " + std::to_string(f.level) +
                    " (expected " + prefix + "<letters>)");
  }
  for (const auto& [p, sign] : f.fricke_signs) {
    if (!is_prime(p) || f.level % p != 0) {
      throw DataError("Fricke sign given at " + std::to_string(p) + ", which is not a prime dividing the level");
    }
    if (sign != 1 && sign != -1) throw DataError("Fricke sign at " + std::to_string(p) + " must be +1 or -1");
  }
}

bool label_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

NewformSet::NewformSet(std::vector<Newform> forms) : forms_(std::move(forms)) {
  for (const auto& f : forms_) validate(f);
  std::sort(forms_.begin(), forms_.end(), form_less);
  for (std::size_t i = 1; i < forms_.size(); ++i) {
    if (forms_[i].label == forms_[i - 1].label) throw DataError("duplicate label " + forms_[i].label);
  }
}

const Newform* NewformSet::find(std::string_view label) const {
  for (const auto& f : forms_) {
    if (f.label == label) return &f;
  }
  return nullptr;
}

bool NewformSet::is_complete_for(Int n) const {
  Int total = 0;
  for (const auto& f : forms_) {
    if (n % f.level == 0) total += f.hecke_degree * divisor_count(n / f.level);
  }
  return total == classical_genus_X0(n);
}

void NewformSet::require_complete_for(Int n) const {
  if (n < 1) throw DataError("level must be positive");
  Int total = 0;
  for (const auto& f : forms_) {
    if (n % f.level == 0) total += f.hecke_degree * divisor_count(n / f.level);
  }
  const Int genus = classical_genus_X0(n);
  if (total != genus) {
    throw DataError("newform set is incomplete for level " + std::to_string(n) + ": forms of level dividing " +
                    std::to_string(n) + " span " + std::to_string(total) + " dimensions but X0(" +
                    std::to_string(n) + ") has genus " + std::to_string(genus));
  }
}

NewformSet NewformSet::merged_with(const NewformSet& other) const {
  std::vector<Newform> all = forms_;
  for (const auto& f : other.forms_) {
    if (const Newform* mine = find(f.label)) {
      if (!(*mine == f)) throw DataError("conflicting records for " + f.label);
      continue;
    }
    all.push_back(f);
  }
  return NewformSet(std::move(all));
}

NewformSet load_fixtures(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw DataError(std::string("fixture is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw DataError("fixture must be a top-level JSON array");
  std::vector<Newform> forms;
  forms.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) forms.push_back(parse_form(doc[i], i));
  return NewformSet(std::move(forms));
}

NewformSet load_fixtures(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return load_fixtures(std::string_view(text));
}

NewformSet load_fixture_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open fixture file " + path);
  return load_fixtures(in);
}

std::string_view bundled_fixture_text() { return detail::kBundledFixture; }

const NewformSet& bundled_fixtures() {
  static const NewformSet set = load_fixtures(detail::kBundledFixture);
  return set;
}

std::string serialize(const NewformSet& set) {
  ordered_json doc = ordered_json::array();
  for (const auto& f : set.forms()) {
    ordered_json signs = ordered_json::object();
    for (const auto& [p, sign] : f.fricke_signs) signs[std::to_string(p)] = sign;
    ordered_json obj;
    obj["label"] = f.label;
    obj["level"] = f.level;
    obj["dim"] = f.hecke_degree;
    obj["analytic_rank"] = f.analytic_rank;
    obj["atkin_lehner"] = std::move(signs);
    doc.push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

std::vector<Newform> forms_of_level_dividing(const NewformSet& set, Int n) {
  std::vector<Newform> out;
  for (const auto& f : set.forms()) {
    if (n % f.level == 0) out.push_back(f);
  }
  return out;
}

Int classical_genus_X0(Int n) {
  if (n < 1) throw DataError("level must be positive");
  Int mu = n;
  for (Int p : prime_divisors(n)) mu = mu / p * (p + 1);
  Int nu2 = 0;
  if (n % 4 != 0) {
    nu2 = 1;
    for (Int p : prime_divisors(n)) nu2 *= p == 2 ? 1 : (p % 4 == 1 ? 2 : 0);
  }
  Int nu3 = 0;
  if (n % 9 != 0) {
    nu3 = 1;
    for (Int p : prime_divisors(n)) nu3 *= p == 3 ? 1 : (p % 3 == 1 ? 2 : 0);
  }
  Int cusps = 0;
  for (Int d : divisors(n)) cusps += euler_phi(std::gcd(d, n / d));
  const Int twelve_g = 12 + mu - 3 * nu2 - 4 * nu3 - 6 * cusps;
  if (twelve_g % 12 != 0) throw CertificateError("genus formula for X0(" + std::to_string(n) + ") is not integral");
  return twelve_g / 12;
}

}  // namespace modcurve
