#include "commands.hpp"

#include "stringhom/bar_oracle.hpp"
#include "stringhom/io.hpp"
#include "stringhom/stringops.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

namespace stringhom::cli {

using ordered = nlohmann::ordered_json;

namespace {

struct Options {
  std::string space;
  std::string file;
  int min_degree = 0;
  int max_degree = 8;
  int weight_cap = 0;
  int columns = 0;
  std::string format = "table";
  std::string cache_dir;
  bool verify_cache = false;
  bool force = false;
  std::string coefficients = "v";
  int degree = 0;
  int string_degree = 0;
  int left = 0;
  int right = 0;
};

std::string str(const Rational& q) { return to_fraction_string(q); }

std::string poly_string(const Alphabet& a, const Poly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : p) {
    if (!s.empty()) s += " + ";
    s += "(" + str(c) + ")" + a.to_string(w);
  }
  return s;
}

class Context {
 public:
  Context(SpaceModel space, const Options& opt) : space_(std::move(space)), verify_(opt.verify_cache) {
    hash_ = content_hash(serialize_algebra(space_.spec));
    if (auto dir = ResultCache::resolve_dir(opt.cache_dir.empty() ? std::nullopt : std::optional(opt.cache_dir)))
      cache_.emplace(*dir);
  }

  const SpaceModel& space() const { return space_; }

  CachedRank rank(ComplexId id, int degree, int cap) {
    if (!cache_) return compute(id, degree, cap);
    CacheKey key{hash_, id, degree, cap, 0};
    if (auto hit = cache_->get(key)) {
      if (verify_ && !(compute(id, degree, cap) == *hit))
        throw InvariantBreach("cache entry " + key.file_name() + " differs from recomputation");
      return *hit;
    }
    CachedRank r = compute(id, degree, cap);
    cache_->put(key, r);
    return r;
  }

  // Recomputes one random cached entry of this algebra.
  void spot_check() {
    if (!cache_) return;
    std::vector<CacheKey> mine;
    for (auto& k : cache_->keys())
      if (k.algebra_hash == hash_) mine.push_back(k);
    if (mine.empty()) return;
    std::mt19937 rng(std::random_device{}());
    const CacheKey& k = mine[std::uniform_int_distribution<std::size_t>(0, mine.size() - 1)(rng)];
    auto hit = cache_->get(k);
    if (hit && !(compute(k.complex, k.degree, k.weight_cap) == *hit))
      throw InvariantBreach("cache entry " + k.file_name() + " differs from recomputation");
  }

 private:
  CachedRank compute(ComplexId id, int degree, int cap) const {
    DegreeCohomology dc = cohomology_at(space_.structure, id, degree, cap);
    CachedRank r;
    r.rank = dc.rank;
    r.cochains = dc.cochains;
    for (const auto& v : dc.representatives) r.representatives.push_back(v.entries);
    return r;
  }

  SpaceModel space_;
  bool verify_;
  std::string hash_;
  std::optional<ResultCache> cache_;
};

SpaceModel load_space(const std::string& where) {
  if (where.rfind("builtin:", 0) == 0) return builtin_space(where.substr(8));
  return make_space(load_algebra(where));
}

void print_table(std::ostream& out, const ordered& rows, const std::vector<std::string>& columns) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back(columns);
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (const auto& c : columns) {
      const auto& v = r.at(c);
      line.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    cells.push_back(line);
  }
  std::vector<std::size_t> width(columns.size(), 0);
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i)
      out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << line[i];
    out << "\n";
  }
}

struct Result {
  ordered doc;
  std::vector<std::string> columns;  // table columns for doc["rows"]
  std::string text;                  // extra table-format text
  std::vector<std::string> missing_caps;
};

void rank_rows(Context& ctx, ComplexId id, const Options& opt, bool cap_given, Result& res) {
  const Alphabet& a = ctx.space().structure.alphabet;
  res.doc["complex"] = complex_name(id);
  res.doc["rows"] = ordered::array();
  for (int n = opt.min_degree; n <= opt.max_degree; ++n) {
    int need = stabilization_cap(a, id, n);
    int W = cap_given ? opt.weight_cap : need;
    CachedRank r = ctx.rank(id, n, W);
    bool stable = ctx.rank(id, n, W + 1).rank == r.rank;
    if (W < need) res.missing_caps.push_back("degree " + std::to_string(n) + " needs --weight-cap " + std::to_string(need));
    res.doc["rows"].push_back({{"degree", n}, {"rank", r.rank}, {"cochains", r.cochains}, {"weight_cap", W},
                               {"required_cap", need}, {"stable", stable}, {"authoritative", W >= need}});
  }
  res.columns = {"degree", "rank", "cochains", "weight_cap", "required_cap", "stable", "authoritative"};
}

ordered cube_json(const std::vector<std::vector<std::vector<Rational>>>& coeff) {
  ordered c = ordered::array();
  for (const auto& row : coeff) {
    ordered jr = ordered::array();
    for (const auto& cell : row) {
      ordered jc = ordered::array();
      for (const auto& x : cell) jc.push_back(str(x));
      jr.push_back(jc);
    }
    c.push_back(jr);
  }
  return c;
}

std::string cube_text(const std::vector<std::vector<std::vector<Rational>>>& coeff, const std::string& op,
                      const std::string& lname, const std::string& rname, const std::string& oname) {
  std::ostringstream o;
  for (std::size_t i = 0; i < coeff.size(); ++i)
    for (std::size_t j = 0; j < coeff[i].size(); ++j) {
      o << op << "(" << lname << i << ", " << rname << j << ") = ";
      std::string terms;
      for (std::size_t l = 0; l < coeff[i][j].size(); ++l)
        if (coeff[i][j][l] != 0) terms += (terms.empty() ? "" : " + ") + ("(" + str(coeff[i][j][l]) + ")" + oname + std::to_string(l));
      o << (terms.empty() ? "0" : terms) << "\n";
    }
  return o.str();
}

ordered derivation_list(const SpaceModel& s, const std::vector<LoopClass>& cls) {
  ordered l = ordered::array();
  for (const auto& c : cls) l.push_back(to_string(s.structure.alphabet, c.hh.representative));
  return l;
}

ordered necklace_list(const SpaceModel& s, const std::vector<StringClass>& cls) {
  ordered l = ordered::array();
  for (const auto& c : cls) l.push_back(poly_string(s.structure.alphabet, c.necklaces));
  return l;
}

ordered vec_json(const std::vector<Rational>& v) {
  ordered a = ordered::array();
  for (const auto& x : v) a.push_back(str(x));
  return a;
}

Result cmd_check(const Options& opt) {
  Result res;
  const std::string& where = opt.file.empty() ? opt.space : opt.file;
  FrobeniusAlgebraSpec spec = where.rfind("builtin:", 0) == 0 ? load_space(where).spec : load_algebra(where);
  ValidationReport rep = validate_frobenius(spec);
  res.doc["name"] = spec.name;
  res.doc["dimension"] = spec.dimension;
  res.doc["failures"] = ordered::array();
  for (const auto& f : rep.failures) {
    ordered w = ordered::array();
    for (auto i : f.witness) w.push_back(spec.basis.label(i));
    res.doc["failures"].push_back({{"kind", f.kind}, {"message", f.message}, {"witness", w}});
  }
  res.doc["valid"] = rep.ok();
  if (!rep.ok()) throw ValidationError(rep);
  SpaceModel s = make_space(spec);
  res.doc["rows"] = ordered::array();
  auto row = [&](const std::string& what, bool ok) { res.doc["rows"].push_back({{"check", what}, {"ok", ok}}); };
  row("frobenius axioms", true);
  row("structure field squares to zero", check_square_zero(s.structure.alphabet, s.structure.m, 6));
  row("structure field kills shuffles", check_cinfinity(s.structure.alphabet, s.structure.m));
  row("structure field is symplectic", is_symplectic(s.structure.alphabet, s.structure.m, s.form));
  res.columns = {"check", "ok"};
  for (const auto& r : res.doc["rows"])
    if (!r["ok"].get<bool>()) throw InvariantBreach("check failed: " + r["check"].get<std::string>());
  return res;
}

Result cmd_hh(Context& ctx, const Options& opt, bool cap_given) {
  Result res;
  if (opt.coefficients != "v" && opt.coefficients != "vdual")
    throw CLI::ValidationError("--coefficients", "must be v or vdual");
  rank_rows(ctx, opt.coefficients == "v" ? ComplexId::HOCH_VV : ComplexId::HOCH_VVDUAL, opt, cap_given, res);
  return res;
}

Result cmd_hc_minus(Context& ctx, const Options& opt, bool cap_given, bool columns_given) {
  Result res;
  HCMinusOptions o;
  if (cap_given) o.weight_cap = opt.weight_cap;
  if (columns_given) o.columns = opt.columns;
  auto rep = hc_minus(ctx.space().structure, opt.min_degree, opt.max_degree, o);
  res.doc["rows"] = ordered::array();
  for (const auto& d : rep.degrees) {
    if (!d.authoritative)
      res.missing_caps.push_back("degree " + std::to_string(d.degree) + " needs --columns " +
                                 std::to_string(hc_minus_column_cap(d.degree)) + " --weight-cap " +
                                 std::to_string(hc_minus_weight_cap(ctx.space().structure.alphabet, d.degree)));
    res.doc["rows"].push_back({{"degree", d.degree}, {"rank", d.rank}, {"cyclic_rank", d.cyclic_rank},
                               {"agree", d.agree}, {"columns", d.columns}, {"weight_cap", d.weight_cap},
                               {"column_stable", d.column_stable}, {"weight_stable", d.weight_stable},
                               {"authoritative", d.authoritative}});
  }
  res.columns = {"degree", "rank", "cyclic_rank", "agree", "columns", "weight_cap", "column_stable", "weight_stable",
                 "authoritative"};
  return res;
}

Result cmd_loop_homology(const SpaceModel& s, const Options& opt) {
  Result res;
  res.doc["rows"] = ordered::array();
  for (const auto& r : loop_homology(s, opt.min_degree, opt.max_degree))
    res.doc["rows"].push_back({{"lm_degree", r.lm_degree}, {"loop_degree", r.loop_degree}, {"hh_degree", r.hh_degree},
                               {"rank", r.rank}, {"dual_rank", r.dual_rank}, {"stable", r.stabilized}});
  res.columns = {"lm_degree", "loop_degree", "hh_degree", "rank", "dual_rank", "stable"};
  return res;
}

Result cmd_loop_op(const SpaceModel& s, const Options& opt, bool bracket) {
  Result res;
  LoopTable t = loop_table(s, opt.left, opt.right, bracket);
  res.doc["left_degree"] = t.p;
  res.doc["right_degree"] = t.q;
  res.doc["output_degree"] = t.out;
  res.doc["left"] = derivation_list(s, t.left);
  res.doc["right"] = derivation_list(s, t.right);
  res.doc["output_basis"] = derivation_list(s, t.out_basis);
  res.doc["table"] = cube_json(t.coeff);
  res.doc["zero"] = t.all_zero();
  std::ostringstream o;
  o << (bracket ? "loop bracket " : "loop product ") << "H_" << t.p << " x H_" << t.q << " -> H_" << t.out << "\n";
  auto list = [&](const char* name, const ordered& l) {
    for (std::size_t i = 0; i < l.size(); ++i) o << "  " << name << i << " = " << l[i].get<std::string>() << "\n";
  };
  list("x", res.doc["left"]);
  list("y", res.doc["right"]);
  list("z", res.doc["output_basis"]);
  o << cube_text(t.coeff, bracket ? "[,]" : "*", "x", "y", "z");
  res.text = o.str();
  return res;
}

Result cmd_string_homology(const SpaceModel& s, const Options& opt) {
  Result res;
  res.doc["rows"] = ordered::array();
  for (const auto& r : string_homology(s, opt.min_degree, opt.max_degree))
    res.doc["rows"].push_back({{"degree", r.n}, {"cyclic_degree", r.cyclic_degree}, {"rank", r.rank},
                               {"hc_minus_rank", r.hc_minus_rank}, {"agree", r.agree}, {"stable", r.stabilized}});
  res.columns = {"degree", "cyclic_degree", "rank", "hc_minus_rank", "agree", "stable"};
  return res;
}

Result cmd_string_bracket(const SpaceModel& s, const Options& opt, bool string_degree_given, bool right_given) {
  Result res;
  int n = string_degree_given ? opt.string_degree : Grading::string_from_lie(opt.degree, s.d);
  int k = right_given ? Grading::string_from_lie(opt.right, s.d) : n;
  BracketTable t = string_bracket_table(s, n, k);
  res.doc["string_degree"] = n;
  res.doc["lie_degree"] = Grading::lie_from_string(n, s.d);
  res.doc["right_string_degree"] = k;
  res.doc["output_string_degree"] = t.out;
  res.doc["classes"] = necklace_list(s, t.left);
  if (k != n) res.doc["right_classes"] = necklace_list(s, t.right);
  res.doc["output_basis"] = necklace_list(s, t.out_basis);
  res.doc["table"] = cube_json(t.coeff);
  res.doc["nonabelian"] = !t.all_zero();
  auto sl2 = find_sl2_basis(t);
  if (sl2) res.doc["sl2"] = {{"E", vec_json(sl2->e)}, {"H", vec_json(sl2->h)}, {"F", vec_json(sl2->f)}};
  std::ostringstream o;
  o << "string bracket H_" << n << " x H_" << k << " -> H_" << t.out << " (Lie degree "
    << Grading::lie_from_string(n, s.d) << ")\n";
  o << t.left.size() << " classes, " << (t.all_zero() ? "abelian" : "nonabelian") << "\n";
  auto list = [&](const char* name, const ordered& l) {
    for (std::size_t i = 0; i < l.size(); ++i) o << "  " << name << i << " = " << l[i].get<std::string>() << "\n";
  };
  list("x", res.doc["classes"]);
  if (k != n) list("y", res.doc["right_classes"]);
  list("z", res.doc["output_basis"]);
  o << cube_text(t.coeff, "{,}", "x", k != n ? "y" : "x", "z");
  if (sl2) {
    auto v = [](const std::vector<Rational>& x) {
      std::string s;
      for (const auto& c : x) s += (s.empty() ? "" : ", ") + str(c);
      return "[" + s + "]";
    };
    o << "sl2 basis: E = " << v(sl2->e) << ", H = " << v(sl2->h) << ", F = " << v(sl2->f) << "\n";
  }
  res.text = o.str();
  return res;
}

Result cmd_oracle(Context& ctx, const Options& opt, const std::string& coefficients) {
  Result res;
  res.doc["rows"] = ordered::array();
  std::vector<std::pair<Coefficients, ComplexId>> which;
  if (coefficients != "vdual") which.push_back({Coefficients::V, ComplexId::HOCH_VV});
  if (coefficients != "v") which.push_back({Coefficients::VDUAL, ComplexId::HOCH_VVDUAL});
  bool all = true;
  for (auto [c, id] : which)
    for (int n = opt.min_degree; n <= opt.max_degree; ++n) {
      std::size_t bar = bar_oracle_rank(ctx.space().spec, c, n);
      std::size_t der = ctx.rank(id, n, stabilization_cap(ctx.space().structure.alphabet, id, n)).rank;
      all = all && bar == der;
      res.doc["rows"].push_back({{"coefficients", c == Coefficients::V ? "v" : "vdual"}, {"degree", n},
                                 {"bar_rank", bar}, {"derivation_rank", der}, {"agree", bar == der}});
    }
  res.columns = {"coefficients", "degree", "bar_rank", "derivation_rank", "agree"};
  if (!all) throw InvariantBreach("bar model and derivation model ranks differ");
  return res;
}

void emit(std::ostream& out, const Result& res, const std::string& format, const std::string& command,
          const std::string& space) {
  if (format == "json") {
    ordered doc;
    doc["command"] = command;
    doc["space"] = space;
    for (auto it = res.doc.begin(); it != res.doc.end(); ++it) doc[it.key()] = it.value();
    out << doc.dump(2) << "\n";
    return;
  }
  out << command << ": " << space << "\n";
  if (res.doc.contains("rows") && !res.columns.empty()) print_table(out, res.doc["rows"], res.columns);
  out << res.text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact string topology of formal Poincare duality spaces"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--space", opt.space, "builtin:<s2|s3|cp2|s3xs3|sN|cpN> or algebra JSON path");
    sub->add_option("--min-degree", opt.min_degree, "lowest degree");
    sub->add_option("--max-degree", opt.max_degree, "highest degree");
    sub->add_option("--weight-cap", opt.weight_cap, "word length cap (default: sufficient cap per degree)");
    sub->add_option("--columns", opt.columns, "negative cyclic column count");
    sub->add_option("--format", opt.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--cache-dir", opt.cache_dir, "result cache directory (env STRINGHOM_CACHE)");
    sub->add_flag("--verify-cache", opt.verify_cache, "recompute every cache hit");
    sub->add_flag("--force", opt.force, "report truncated results instead of failing");
  };

  auto* check = app.add_subcommand("check", "validate an algebra file");
  check->add_option("file", opt.file, "algebra JSON path");
  auto* hh = app.add_subcommand("hh", "Hochschild cohomology ranks");
  hh->add_option("--coefficients", opt.coefficients, "v or vdual")->check(CLI::IsMember({"v", "vdual"}));
  auto* hc = app.add_subcommand("hc", "cyclic cohomology ranks");
  auto* hcm = app.add_subcommand("hc-minus", "negative cyclic ranks");
  auto* lh = app.add_subcommand("loop-homology", "loop homology ranks");
  auto* lp = app.add_subcommand("loop-product", "loop product structure constants");
  auto* lb = app.add_subcommand("loop-bracket", "loop bracket structure constants");
  auto* sh = app.add_subcommand("string-homology", "equivariant loop homology ranks");
  auto* sb = app.add_subcommand("string-bracket", "string bracket structure constants");
  auto* orc = app.add_subcommand("oracle", "bar-model cross-check of Hochschild ranks");
  orc->add_option("--coefficients", opt.coefficients, "v, vdual or both")->check(CLI::IsMember({"v", "vdual", "both"}));
  for (auto* s : {check, hh, hc, hcm, lh, lp, lb, sh, sb, orc}) common(s);
  for (auto* s : {lp, lb}) {
    s->add_option("--left", opt.left, "loop homology degree of the left factor")->required();
    s->add_option("--right", opt.right, "loop homology degree of the right factor")->required();
  }
  sb->add_option("--degree", opt.degree, "Lie degree (the bracket preserves it)");
  sb->add_option("--string-degree", opt.string_degree, "equivariant homology degree");
  sb->add_option("--right", opt.right, "Lie degree of the right factor (default: same)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }
  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  auto given = [&](const char* name) { return sub->count(name) > 0; };

  try {
    Result res;
    std::string label;
    if (sub == check) {
      if (opt.file.empty() && opt.space.empty()) throw CLI::RequiredError("file or --space");
      label = opt.file.empty() ? opt.space : opt.file;
      res = cmd_check(opt);
    } else {
      if (opt.space.empty()) throw CLI::RequiredError("--space");
      label = opt.space;
      Context ctx(load_space(opt.space), opt);
      const SpaceModel& s = ctx.space();
      if (sub == hh) res = cmd_hh(ctx, opt, given("--weight-cap"));
      else if (sub == hc) rank_rows(ctx, ComplexId::CYCLIC, opt, given("--weight-cap"), res);
      else if (sub == hcm) res = cmd_hc_minus(ctx, opt, given("--weight-cap"), given("--columns"));
      else if (sub == lh) res = cmd_loop_homology(s, opt);
      else if (sub == lp) res = cmd_loop_op(s, opt, false);
      else if (sub == lb) res = cmd_loop_op(s, opt, true);
      else if (sub == sh) res = cmd_string_homology(s, opt);
      else if (sub == sb) {
        if (given("--degree") && given("--string-degree"))
          throw CLI::ValidationError("--degree", "give either --degree or --string-degree");
        if (!given("--degree") && !given("--string-degree")) throw CLI::RequiredError("--degree");
        res = cmd_string_bracket(s, opt, given("--string-degree"), given("--right"));
      } else if (sub == orc) {
        res = cmd_oracle(ctx, opt, given("--coefficients") ? opt.coefficients : "both");
      }
      ctx.spot_check();
    }
    if (!res.missing_caps.empty() && !opt.force) {
      err << "non-authoritative truncation; rerun with sufficient caps or --force:\n";
      for (const auto& m : res.missing_caps) err << "  " << m << "\n";
      return TRUNCATED;
    }
    emit(out, res, opt.format, command, label);
    return OK;
  } catch (const CLI::Error& e) {
    err << e.what() << "\n" << sub->help();
    return 1;
  } catch (const ValidationError& e) {
    err << e.what();
    return VALIDATION;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return VALIDATION;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantBreach& e) {
    err << "invariant breach: " << e.what() << "\n";
    return BREACH;
  } catch (const std::logic_error& e) {
    err << "invariant breach: " << e.what() << "\n";
    return BREACH;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace stringhom::cli
