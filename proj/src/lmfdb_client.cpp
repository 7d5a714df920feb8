#include "modcurve/lmfdb_client.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "httplib.h"
#include "json.hpp"
#include "modcurve/errors.hpp"

namespace modcurve {

namespace {

using nlohmann::json;

const char* env_or_null(const char* name) {
  const char* v = std::getenv(name);
  return (v != nullptr && *v != '\0') ? v : nullptr;
}

[[noreturn]] void drift(const std::string& what) {
  throw NetworkError(NetworkError::Reason::SchemaDrift, "remote schema drift: " + what);
}

// "https://host:port/prefix" -> {"https://host:port", "/prefix"}
std::pair<std::string, std::string> split_base(const std::string& base) {
  const auto scheme_end = base.find("://");
  const auto path_start = base.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
  if (path_start == std::string::npos) return {base, ""};
  std::string prefix = base.substr(path_start);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  return {base.substr(0, path_start), prefix};
}

Int field_int(const json& rec, const char* key, const std::string& where) {
  auto it = rec.find(key);
  if (it == rec.end() || it->is_null()) drift(where + " lacks \"" + key + "\"");
  if (!it->is_number_integer()) drift(where + " has non-integer \"" + key + "\"");
  return it->get<Int>();
}

}  // namespace

RemoteConfig RemoteConfig::from_env() {
  RemoteConfig cfg;
  if (const char* url = env_or_null("MODCURVE_LMFDB_URL")) cfg.base_url = url;
  if (const char* dir = env_or_null("MODCURVE_CACHE_DIR")) cfg.cache_dir = dir;
  if (const char* off = env_or_null("MODCURVE_OFFLINE")) cfg.offline = std::string_view(off) != "0";
  return cfg;
}

std::string newform_query_target(Int level) {
  return "/api/mf_newforms/?level=" + std::to_string(level) +
         "&weight=2&char_order=1&_format=json&_fields=label,level,dim,analytic_rank,atkin_lehner_eigenvals";
}

std::vector<Newform> parse_newform_page(std::string_view body, std::string* next) {
  json doc;
  try {
    doc = json::parse(body.begin(), body.end());
  } catch (const json::parse_error& e) {
    drift(std::string("response is not JSON (") + e.what() + ")");
  }
  if (!doc.is_object() || !doc.contains("data") || !doc["data"].is_array()) drift("response lacks a \"data\" array");
  if (next != nullptr) {
    next->clear();
    if (auto it = doc.find("next"); it != doc.end() && it->is_string()) *next = it->get<std::string>();
  }
  std::vector<Newform> out;
  for (const auto& rec : doc["data"]) {
    if (!rec.is_object()) drift("record is not an object");
    auto label = rec.find("label");
    if (label == rec.end() || !label->is_string()) drift("record without a string \"label\"");
    const std::string where = "record " + label->get<std::string>();
    Newform f;
    f.label = label->get<std::string>();
    f.level = field_int(rec, "level", where);
    f.hecke_degree = field_int(rec, "dim", where);
    f.analytic_rank = field_int(rec, "analytic_rank", where);
    auto al = rec.find("atkin_lehner_eigenvals");
    if (al == rec.end() || al->is_null()) drift(where + " lacks \"atkin_lehner_eigenvals\"");
    if (!al->is_array()) drift(where + " has non-array \"atkin_lehner_eigenvals\"");
    for (const auto& pair : *al) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
        drift(where + " has a malformed Atkin-Lehner entry");
      }
      f.fricke_signs[pair[0].get<Int>()] = pair[1].get<int>();
    }
    try {
      validate(f);
    } catch (const DataError& e) {
      drift(where + ": " + e.what());
    }
    out.push_back(std::move(f));
  }
  return out;
}

LmfdbClient::LmfdbClient(RemoteConfig config, const NewformSet* fallback)
    : config_(std::move(config)), fallback_(fallback) {}

std::filesystem::path LmfdbClient::cache_path(Int level) const {
  return config_.cache_dir / ("mf_newforms_level_" + std::to_string(level) + ".json");
}

bool LmfdbClient::read_cache(Int level, std::vector<Newform>& out) const {
  if (config_.cache_dir.empty()) return false;
  std::ifstream in(cache_path(level), std::ios::binary);
  if (!in) return false;
  const NewformSet cached = load_fixtures(in);
  out.assign(cached.forms().begin(), cached.forms().end());
  return true;
}

void LmfdbClient::write_cache(Int level, const std::vector<Newform>& forms) {
  if (config_.cache_dir.empty()) return;
  std::lock_guard lock(cache_mutex_);
  std::error_code ec;
  std::filesystem::create_directories(config_.cache_dir, ec);
  const auto target = cache_path(level);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;  // unwritable cache: proceed uncached
    out << serialize(NewformSet(forms));
  }
  std::filesystem::rename(tmp, target, ec);
}

std::vector<Newform> LmfdbClient::download(Int level) {
  const auto [host, prefix] = split_base(config_.base_url);
  httplib::Client client(host);
  if (!client.is_valid()) {
    throw NetworkError(NetworkError::Reason::Unreachable,
                       "cannot open a client for " + config_.base_url + " (is HTTPS support compiled in?)");
  }
  client.set_connection_timeout(config_.timeout);
  client.set_read_timeout(config_.timeout);
  client.set_follow_location(true);

  std::vector<Newform> out;
  std::string target = newform_query_target(level);
  for (int page = 0; page < 64 && !target.empty(); ++page) {
    ++requests_;
    auto res = client.Get(prefix + target);
    if (!res) {
      throw NetworkError(NetworkError::Reason::Unreachable,
                         "request to " + config_.base_url + " failed: " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
      throw NetworkError(NetworkError::Reason::Unreachable,
                         "HTTP " + std::to_string(res->status) + " from " + config_.base_url + target);
    }
    std::string next;
    for (auto& f : parse_newform_page(res->body, &next)) {
      if (f.level != level) drift("record " + f.label + " answers a query for level " + std::to_string(level));
      out.push_back(std::move(f));
    }
    target = next;
    if (!target.empty() && !prefix.empty() && target.rfind(prefix, 0) == 0) target = target.substr(prefix.size());
  }
  return out;
}

NewformSet LmfdbClient::fetch_level_dividing(Int n) {
  if (n < 1) throw DataError("level must be positive");
  std::vector<Newform> forms;
  for (Int m : divisors(n)) {
    std::vector<Newform> level_forms;
    if (read_cache(m, level_forms)) {
      forms.insert(forms.end(), level_forms.begin(), level_forms.end());
      continue;
    }
    if (config_.offline) {
      if (fallback_ != nullptr && fallback_->is_complete_for(n)) return NewformSet(forms_of_level_dividing(*fallback_, n));
      throw NetworkError(NetworkError::Reason::NoCacheOffline,
                         "offline and no cached data for level " + std::to_string(m) +
                             " (bundled fixtures do not cover level " + std::to_string(n) + ")");
    }
    level_forms = download(m);
    write_cache(m, level_forms);
    forms.insert(forms.end(), level_forms.begin(), level_forms.end());
  }
  NewformSet set;
  try {
    set = NewformSet(std::move(forms));
  } catch (const DataError& e) {
    drift(e.what());
  }
  if (!set.is_complete_for(n)) drift("remote newforms do not span S2(Gamma0(" + std::to_string(n) + "))");
  return set;
}

NewformSet fetch_remote(Int level_divides) {
  LmfdbClient client(RemoteConfig::from_env());
  return client.fetch_level_dividing(level_divides);
}

}  // namespace modcurve
