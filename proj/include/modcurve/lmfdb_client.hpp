#pragma once

// Optional live source for newform metadata: an LMFDB-style HTTP API queried
// once per divisor M of the requested level, normalized into the fixture
// schema and cached on disk (one fixture-format file per level).
//
// Environment:
//   MODCURVE_LMFDB_URL  base URL (default https://www.lmfdb.org)
//   MODCURVE_CACHE_DIR  cache directory (caching disabled when unset)
//   MODCURVE_OFFLINE=1  never touch the network; cache, then bundled fixtures

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <mutex>
#include <string>
#include <string_view>

#include "modcurve/newform_store.hpp"

namespace modcurve {

struct RemoteConfig {
  std::string base_url = "https://www.lmfdb.org";
  std::filesystem::path cache_dir;
  bool offline = false;
  std::chrono::seconds timeout{30};

  static RemoteConfig from_env();
};

/// Request target (path and query) for newforms of exact level m.
std::string newform_query_target(Int level);

/// Normalizes one API page. Records must carry label, level, dim,
/// analytic_rank and atkin_lehner_eigenvals ([[p, sign], ...]); a missing or
/// null field is reported as NetworkError::Reason::SchemaDrift.
/// `next` receives the continuation target, empty when there is none.
std::vector<Newform> parse_newform_page(std::string_view body, std::string* next = nullptr);

class LmfdbClient {
 public:
  /// `fallback` is used in offline mode when the cache cannot answer.
  explicit LmfdbClient(RemoteConfig config, const NewformSet* fallback = &bundled_fixtures());

  /// Every newform of level dividing n. Throws NetworkError when the data
  /// cannot be obtained.
  NewformSet fetch_level_dividing(Int n);

  /// HTTP requests issued so far by this client.
  std::size_t network_requests() const { return requests_; }

  const RemoteConfig& config() const { return config_; }

 private:
  std::filesystem::path cache_path(Int level) const;
  bool read_cache(Int level, std::vector<Newform>& out) const;
  void write_cache(Int level, const std::vector<Newform>& forms);
  std::vector<Newform> download(Int level);

  RemoteConfig config_;
  const NewformSet* fallback_;
  std::size_t requests_ = 0;
  std::mutex cache_mutex_;
};

/// LmfdbClient(RemoteConfig::from_env()).fetch_level_dividing(level_divides).
NewformSet fetch_remote(Int level_divides);

}  // namespace modcurve
