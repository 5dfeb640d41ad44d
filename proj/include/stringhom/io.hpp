#pragma once

#include "stringhom/algebra.hpp"
#include "stringhom/graded.hpp"
#include "stringhom/linalg.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stringhom {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses an algebra document; does not validate the algebra axioms.
FrobeniusAlgebraSpec parse_algebra(const std::string& text, const std::string& source = "<input>");
FrobeniusAlgebraSpec load_algebra(const std::filesystem::path& path);
std::string serialize_algebra(const FrobeniusAlgebraSpec& spec);

// Stable 64-bit FNV-1a digest, rendered as hex.
std::string content_hash(const std::string& data);

struct CacheKey {
  std::string algebra_hash;
  ComplexId complex = ComplexId::HOCH_VV;
  int degree = 0;
  int weight_cap = 0;
  int columns = 0;  // negative cyclic only
  std::string file_name() const;
};

struct CachedRank {
  std::size_t rank = 0;
  std::size_t cochains = 0;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> representatives;
  bool operator==(const CachedRank&) const = default;
};

// Content-addressed store; each entry is written once to a temporary file and
// renamed into place so readers never see partial data.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);
  // Directory from an explicit flag, else $STRINGHOM_CACHE, else none.
  static std::optional<std::filesystem::path> resolve_dir(const std::optional<std::string>& flag);

  std::optional<CachedRank> get(const CacheKey& key) const;
  void put(const CacheKey& key, const CachedRank& value) const;
  std::vector<CacheKey> keys() const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace stringhom
