#include "stringhom/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace stringhom {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& source, const std::string& where, const std::string& what) {
  throw ParseError(source + ": " + where + ": " + what);
}

const json& field(const json& obj, const char* name, const std::string& source, const std::string& where) {
  if (!obj.is_object()) schema_error(source, where, "expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) schema_error(source, where, std::string("missing field '") + name + "'");
  return *it;
}

long long integer(const json& v, const std::string& source, const std::string& where) {
  if (!v.is_number_integer()) schema_error(source, where, "expected an integer");
  return v.get<long long>();
}

std::size_t index(const json& v, std::size_t n, const std::string& source, const std::string& where) {
  long long i = integer(v, source, where);
  if (i < 0 || static_cast<std::size_t>(i) >= n)
    schema_error(source, where, "basis index " + std::to_string(i) + " out of range");
  return static_cast<std::size_t>(i);
}

Rational rational(const json& v, const std::string& source, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) schema_error(source, where, "expected a \"p/q\" string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::exception& e) {
    schema_error(source, where, e.what());
  }
}

std::string at(const std::string& list, std::size_t i) { return list + "[" + std::to_string(i) + "]"; }

}  // namespace

FrobeniusAlgebraSpec parse_algebra(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based; translate to line and column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }

  GradedBasis basis;
  const json& jb = field(doc, "basis", source, "document");
  if (!jb.is_array()) schema_error(source, "basis", "expected a list");
  for (std::size_t i = 0; i < jb.size(); ++i) {
    const json& lab = field(jb[i], "label", source, at("basis", i));
    if (!lab.is_string()) schema_error(source, at("basis", i), "label must be a string");
    int deg = static_cast<int>(integer(field(jb[i], "degree", source, at("basis", i)), source, at("basis", i)));
    basis.elements.emplace_back(lab.get<std::string>(), deg);
  }
  const json& jname = field(doc, "name", source, "document");
  if (!jname.is_string()) schema_error(source, "name", "expected a string");
  int dim = static_cast<int>(integer(field(doc, "dimension", source, "document"), source, "dimension"));
  FrobeniusAlgebraSpec spec(jname.get<std::string>(), basis, dim);
  const std::size_t n = basis.size();

  const json& jp = field(doc, "product", source, "document");
  if (!jp.is_array()) schema_error(source, "product", "expected a list");
  for (std::size_t r = 0; r < jp.size(); ++r) {
    std::string w = at("product", r);
    std::size_t i = index(field(jp[r], "i", source, w), n, source, w);
    std::size_t j = index(field(jp[r], "j", source, w), n, source, w);
    const json& terms = field(jp[r], "terms", source, w);
    if (!terms.is_array()) schema_error(source, w, "terms must be a list");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      std::string wt = w + ".terms[" + std::to_string(t) + "]";
      std::size_t k = index(field(terms[t], "k", source, wt), n, source, wt);
      spec.c(i, j, k) += rational(field(terms[t], "coeff", source, wt), source, wt);
    }
  }

  const json& jq = field(doc, "pairing", source, "document");
  if (!jq.is_array()) schema_error(source, "pairing", "expected a list");
  for (std::size_t r = 0; r < jq.size(); ++r) {
    std::string w = at("pairing", r);
    std::size_t i = index(field(jq[r], "i", source, w), n, source, w);
    std::size_t j = index(field(jq[r], "j", source, w), n, source, w);
    spec.pair(i, j) = rational(field(jq[r], "value", source, w), source, w);
  }
  return spec;
}

FrobeniusAlgebraSpec load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str(), path.string());
}

std::string serialize_algebra(const FrobeniusAlgebraSpec& spec) {
  json doc;
  doc["name"] = spec.name;
  doc["dimension"] = spec.dimension;
  doc["basis"] = json::array();
  for (const auto& [label, deg] : spec.basis.elements) doc["basis"].push_back({{"label", label}, {"degree", deg}});
  const std::size_t n = spec.size();
  doc["product"] = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      json terms = json::array();
      for (std::size_t k = 0; k < n; ++k)
        if (spec.c(i, j, k) != 0) terms.push_back({{"coeff", to_fraction_string(spec.c(i, j, k))}, {"k", k}});
      if (!terms.empty()) doc["product"].push_back({{"i", i}, {"j", j}, {"terms", terms}});
    }
  doc["pairing"] = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (spec.pair(i, j) != 0)
        doc["pairing"].push_back({{"i", i}, {"j", j}, {"value", to_fraction_string(spec.pair(i, j))}});
  return doc.dump(2) + "\n";
}

std::string content_hash(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string CacheKey::file_name() const {
  return algebra_hash + "-" + complex_name(complex) + "-d" + std::to_string(degree) + "-w" +
         std::to_string(weight_cap) + "-c" + std::to_string(columns) + ".json";
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::optional<std::filesystem::path> ResultCache::resolve_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv("STRINGHOM_CACHE"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

namespace {
json key_json(const CacheKey& k) {
  return {{"algebra", k.algebra_hash}, {"complex", complex_name(k.complex)}, {"degree", k.degree},
          {"weight_cap", k.weight_cap}, {"columns", k.columns}};
}

std::optional<ComplexId> complex_from_name(const std::string& s) {
  for (ComplexId id : {ComplexId::PLAIN_WORDS, ComplexId::NECKLACES, ComplexId::HOCH_VV, ComplexId::HOCH_VVDUAL,
                       ComplexId::CYCLIC})
    if (complex_name(id) == s) return id;
  return std::nullopt;
}
}  // namespace

std::optional<CachedRank> ResultCache::get(const CacheKey& key) const {
  std::ifstream in(dir_ / key.file_name(), std::ios::binary);
  if (!in) return std::nullopt;
  try {
    json doc = json::parse(in);
    if (doc.at("key") != key_json(key)) return std::nullopt;
    CachedRank r;
    r.rank = doc.at("rank").get<std::size_t>();
    r.cochains = doc.at("cochains").get<std::size_t>();
    for (const auto& rep : doc.at("representatives")) {
      std::vector<std::pair<std::size_t, Rational>> v;
      for (const auto& e : rep) v.emplace_back(e.at(0).get<std::size_t>(), parse_rational(e.at(1).get<std::string>()));
      r.representatives.push_back(std::move(v));
    }
    return r;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are treated as misses
  }
}

void ResultCache::put(const CacheKey& key, const CachedRank& value) const {
  json doc;
  doc["key"] = key_json(key);
  doc["rank"] = value.rank;
  doc["cochains"] = value.cochains;
  doc["representatives"] = json::array();
  for (const auto& rep : value.representatives) {
    json v = json::array();
    for (const auto& [i, c] : rep) v.push_back({i, to_fraction_string(c)});
    doc["representatives"].push_back(v);
  }
  auto target = dir_ / key.file_name();
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << doc.dump() << "\n";
  }
  std::filesystem::rename(tmp, target);
}

std::vector<CacheKey> ResultCache::keys() const {
  std::vector<CacheKey> out;
  if (!std::filesystem::exists(dir_)) return out;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir_))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    try {
      std::ifstream in(p, std::ios::binary);
      json k = json::parse(in).at("key");
      auto id = complex_from_name(k.at("complex").get<std::string>());
      if (!id) continue;
      out.push_back({k.at("algebra").get<std::string>(), *id, k.at("degree").get<int>(), k.at("weight_cap").get<int>(),
                     k.at("columns").get<int>()});
    } catch (const std::exception&) {
    }
  }
  return out;
}

}  // namespace stringhom
