#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lspec/chebotarev.hpp"
#include "lspec/volume.hpp"

#include "json.hpp"

namespace lspec {

/// Key/value text with optional [section] headers. Keys and values are
/// separated by ':' or '='; '#' starts a comment. Repeated keys are kept.
struct ConfigEntry {
  std::string section;
  std::string key;
  std::string value;
  int line = 0;
};
std::vector<ConfigEntry> parse_config(std::string_view text);
/// "[a, 'b', \"c\"]" or "a, b" -> {"a", "b", "c"}.
std::vector<std::string> parse_list(std::string_view value);

/// How a field was described, kept so reports can be replayed.
struct FieldSpec {
  std::string polynomial;
  std::optional<Integer> discriminant;
  std::map<u64, std::vector<int>> shapes;

  NumberField build() const;
  nlohmann::ordered_json to_json() const;
  static FieldSpec from_json(const nlohmann::ordered_json& j);
};

/// Entries `poly`, `disc`, `shape: p = 1,2` (section ignored).
FieldSpec parse_field_spec(const std::vector<ConfigEntry>& entries);
FieldSpec load_field_spec(const std::filesystem::path& path);

struct ExtensionSpec {
  enum class Kind { Trace, Radicand };
  Kind kind = Kind::Trace;
  std::string element;

  QuadraticExtension build(const NumberField& field) const;
};

struct TwinRequest {
  FieldSpec field;
  std::vector<std::string> base_ram;  ///< RamificationSet tokens
  std::vector<ExtensionSpec> extensions;
  int k = 2;
  u64 window = 30;
  u64 height = 100'000;
  OverlapPolicy policy = OverlapPolicy::Disjoint;
  bool manifold = false;
  std::optional<std::string> p0;
  int n_max = 12;
  u64 torsion_height = 10'000;
  u64 zeta_cutoff = kDefaultZetaCutoff;
  int precision = kDefaultPrecision;
  unsigned threads = 1;

  nlohmann::ordered_json to_json() const;
  static TwinRequest from_json(const nlohmann::ordered_json& j);
};

/// Sections [field] (inline keys or `file:` relative to base_dir),
/// [algebra] (ram_real, ram_primes, ram_opaque), [extensions] (trace:,
/// radicand:) and [search] (k, window, height, policy, manifold, p0, n_max,
/// torsion_height, zeta_cutoff, precision, threads).
TwinRequest parse_twin_request(std::string_view text, const std::filesystem::path& base_dir = {});
TwinRequest load_twin_request(const std::filesystem::path& path);

struct TwinContext {
  TwinRequest request;
  NumberField field;
  QuaternionAlgebra base;
  std::vector<QuadraticExtension> extensions;
  std::vector<EmbeddingCertificate> base_embeddings;
  std::vector<std::optional<GeodesicDatum>> geodesics;
  CompositumCheck compositum;
};

/// Checks the standing hypotheses. Throws NotKleinian, RealPlaceUnramified,
/// EmbeddingFails, CompositumDegenerate, NotLoxodromic.
TwinContext validate_base(const TwinRequest& request);

/// The least-norm degree-1 prime with all-inert Frobenius vector outside
/// Ram_f(B), or the rechecked override. Throws NoneBelowHeight, InvalidInput.
PrimeIdeal choose_p0(const TwinContext& context);

/// Full construction as a JSON report. Throws NoTuplesFound.
nlohmann::ordered_json construct_twins(const TwinContext& context);
/// validate_base + choose_p0 + construct_twins.
nlohmann::ordered_json run_twins(const TwinRequest& request);

inline constexpr int kReportSchemaVersion = 1;

struct VerifyResult {
  bool ok = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;
};

/// Re-derives every certificate in a report from its request echo.
VerifyResult verify_report(const nlohmann::ordered_json& report);

/// "1e6", "100000", "1_000_000".
u64 parse_count(std::string_view text);

}  // namespace lspec
