#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "brieskorn/errors.hpp"
#include "brieskorn/verify.hpp"

namespace brieskorn::verify {

namespace {

std::string join_path(const std::string& base, const std::string& key) { return base.empty() ? key : base + "." + key; }
std::string index_path(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

Rational rational_at(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ConfigError(path, e.what());
    }
  }
  if (v.is_number_float()) throw ConfigError(path, "floating-point numbers are not accepted; write rationals as \"p/q\"");
  throw ConfigError(path, "expected a rational (integer or \"p/q\" string)");
}

int int_at(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ConfigError(path, "expected an integer");
  return v.get<int>();
}

/// h given as a coefficient list [c_0, c_1, ...] or a series literal in s.
Series series_at(const Json& v, const std::string& path, int degree) {
  if (v.is_array()) {
    Series out(1, degree);
    for (std::size_t k = 0; k < v.size(); ++k) {
      Rational c = rational_at(v[k], index_path(path, k));
      if (k > static_cast<std::size_t>(degree)) {
        if (c != 0) throw ConfigError(index_path(path, k), "coefficient beyond the series degree N = " + std::to_string(degree));
        continue;
      }
      out.add_term(exponents({static_cast<int>(k)}), c);
    }
    return out;
  }
  if (v.is_string()) {
    try {
      Series s = parse_series(v.get<std::string>(), 1, kMaxSeriesDegree);
      for (const auto& [e, c] : s.terms())
        if (e[0] > degree) throw ConfigError(path, "term of degree " + std::to_string(e[0]) + " beyond N = " + std::to_string(degree));
      return s.truncate(degree);
    } catch (const ParseError& e) {
      throw ConfigError(path, e.what());
    } catch (const StructuralError& e) {
      throw ConfigError(path, e.what());
    }
  }
  throw ConfigError(path, "expected a coefficient array or a series string");
}

RationalMatrix frame_at(const Json& v, const std::string& path, int r) {
  const auto dim = static_cast<std::size_t>(r + 1);
  RationalMatrix m = RationalMatrix::identity(dim);
  if (!v.is_object()) throw ConfigError(path, "expected an object with \"matrix\" or \"alpha\"/\"beta\"/\"gamma\"");
  if (v.contains("matrix")) {
    const Json& rows = v["matrix"];
    const std::string mpath = join_path(path, "matrix");
    if (!rows.is_array() || rows.size() != dim) throw ConfigError(mpath, "expected " + std::to_string(dim) + " rows");
    for (std::size_t i = 0; i < dim; ++i) {
      const Json& row = rows[i];
      if (!row.is_array() || row.size() != dim)
        throw ConfigError(index_path(mpath, i), "expected " + std::to_string(dim) + " entries");
      for (std::size_t j = 0; j < dim; ++j) m(i, j) = rational_at(row[j], index_path(index_path(mpath, i), j));
    }
    for (const char* key : {"alpha", "beta", "gamma"})
      if (v.contains(key)) throw ConfigError(path, "give either \"matrix\" or the (alpha, beta, gamma) triple, not both");
  } else {
    if (v.contains("alpha")) m(1, 0) = rational_at(v["alpha"], join_path(path, "alpha"));
    if (v.contains("beta")) m(2, 0) = rational_at(v["beta"], join_path(path, "beta"));
    if (v.contains("gamma")) m(2, 1) = rational_at(v["gamma"], join_path(path, "gamma"));
  }
  if (!m.is_lower_unitriangular()) throw ConfigError(path, "frame must be unit lower-triangular");
  return m;
}

Json series_to_json(const Series& s) {
  Json arr = Json::array();
  for (int k = 0; k <= s.degree_bound(); ++k) arr.push_back(brieskorn::to_string(s.coefficient(exponents({k}))));
  while (arr.size() > 1 && arr.back() == "0") arr.erase(arr.end() - 1);
  return arr;
}

void check_keys(const Json& doc, const std::vector<std::string>& allowed, const std::string& path) {
  for (const auto& [key, value] : doc.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ConfigError(join_path(path, key), "unknown key");
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::Special: return "special";
    case Family::Nilpotent: return "nilpotent";
    case Family::Relative: return "relative";
  }
  return "unknown";
}

void apply_environment(Json& doc) {
  for (const auto& [var, key] : {std::pair{"BRIESKORN_N", "N"}, std::pair{"BRIESKORN_K", "K"}}) {
    const char* text = std::getenv(var);
    if (text == nullptr || *text == '\0') continue;
    int value = 0;
    const char* end = text + std::char_traits<char>::length(text);
    auto [ptr, ec] = std::from_chars(text, end, value);
    if (ec != std::errc() || ptr != end) throw ConfigError(std::string("$") + var, "expected an integer, got \"" + std::string(text) + "\"");
    doc[key] = value;
  }
}

RunConfig parse_config(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("", "configuration must be a JSON object");
  check_keys(doc, {"r", "N", "K", "family", "h", "h_i", "frame", "suites", "seed", "samples", "debug"}, "");
  RunConfig c;
  if (doc.contains("r")) c.r = int_at(doc["r"], "r");
  if (doc.contains("N")) c.N = int_at(doc["N"], "N");
  if (doc.contains("K")) c.K = int_at(doc["K"], "K");
  if (c.r < 2 || c.r > kMaxSeriesVars) throw ConfigError("r", "r must lie in [2, " + std::to_string(kMaxSeriesVars) + "]");
  if (c.N < 5 || c.N > 40) throw ConfigError("N", "N must lie in [5, 40]");
  if (c.K < c.r + 2 || c.K > 64) throw ConfigError("K", "K must lie in [r + 2, 64]");
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) throw ConfigError("seed", "expected a non-negative integer");
    c.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("samples")) {
    c.samples = int_at(doc["samples"], "samples");
    if (c.samples < 0 || c.samples > 1000) throw ConfigError("samples", "samples must lie in [0, 1000]");
  }

  std::string family = "special";
  if (doc.contains("family")) {
    if (!doc["family"].is_string()) throw ConfigError("family", "expected a string");
    family = doc["family"].get<std::string>();
  }
  if (family == "special") c.family = Family::Special;
  else if (family == "nilpotent") c.family = Family::Nilpotent;
  else if (family == "relative") c.family = Family::Relative;
  else throw ConfigError("family", "unknown family \"" + family + "\" (special | nilpotent | relative)");

  // Inputs not given explicitly are drawn from a generator seeded by `seed`,
  // in a fixed order, so the echoed config reproduces the run.
  std::mt19937_64 rng(c.seed);
  Series drawn_h = random_inputs::deformation_function(rng, c.N);
  std::vector<Series> drawn_hi = random_inputs::relative_functions(rng, c.r, c.N);

  c.h = doc.contains("h") ? series_at(doc["h"], "h", c.N) : drawn_h;
  try {
    validate_deformation_function(c.h);
  } catch (const DomainError& e) {
    throw ConfigError("h", e.what());
  }

  if (doc.contains("h_i")) {
    const Json& arr = doc["h_i"];
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(c.r - 1))
      throw ConfigError("h_i", "expected " + std::to_string(c.r - 1) + " functions h_2..h_r");
    for (std::size_t i = 0; i < arr.size(); ++i) c.h_i.push_back(series_at(arr[i], index_path("h_i", i), c.N));
  } else {
    c.h_i = drawn_hi;
  }
  if (c.family == Family::Relative) {
    try {
      validate_relative_spec(GMSystem::constant(c.r, c.K, c.N), RelativeFamilySpec{c.h_i});
    } catch (const std::exception& e) {
      throw ConfigError("h_i", e.what());
    }
  }

  c.frame = doc.contains("frame") ? frame_at(doc["frame"], "frame", c.r)
                                  : RationalMatrix::identity(static_cast<std::size_t>(c.r + 1));

  if (doc.contains("suites")) {
    const Json& arr = doc["suites"];
    if (!arr.is_array()) throw ConfigError("suites", "expected an array of suite names");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (!arr[i].is_string()) throw ConfigError(index_path("suites", i), "expected a suite name");
      std::string name = arr[i].get<std::string>();
      const auto& known = known_suites();
      if (std::find(known.begin(), known.end(), name) == known.end())
        throw ConfigError(index_path("suites", i), "unknown suite \"" + name + "\"");
      c.suites.push_back(std::move(name));
    }
  }

  if (doc.contains("debug")) {
    const Json& dbg = doc["debug"];
    if (!dbg.is_object()) throw ConfigError("debug", "expected an object");
    check_keys(dbg, {"perturb_generator"}, "debug");
    if (dbg.contains("perturb_generator")) {
      int j = int_at(dbg["perturb_generator"], "debug.perturb_generator");
      if (j < 0 || j > c.r) throw ConfigError("debug.perturb_generator", "generator index outside 0..r");
      c.perturb_generator = j;
    }
  }
  return c;
}

Json config_to_json(const RunConfig& c) {
  Json doc;
  doc["r"] = c.r;
  doc["N"] = c.N;
  doc["K"] = c.K;
  doc["family"] = to_string(c.family);
  doc["h"] = series_to_json(c.h);
  Json hi = Json::array();
  for (const auto& f : c.h_i) hi.push_back(series_to_json(f));
  doc["h_i"] = hi;
  Json rows = Json::array();
  for (std::size_t i = 0; i < c.frame.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < c.frame.cols(); ++j) row.push_back(brieskorn::to_string(c.frame(i, j)));
    rows.push_back(row);
  }
  doc["frame"] = {{"matrix", rows}};
  doc["suites"] = c.suites;
  doc["seed"] = c.seed;
  doc["samples"] = c.samples;
  if (c.perturb_generator) doc["debug"] = {{"perturb_generator", *c.perturb_generator}};
  return doc;
}

namespace random_inputs {

Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  return make_rational(num(rng), den(rng));
}

Series deformation_function(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> coef(-5, 5), nonzero(1, 10);
  Series h(1, degree);
  int c2 = nonzero(rng) - 5;
  if (c2 <= 0) --c2;  // [-5, -1] or [1, 5]
  h.add_term(exponents({2}), c2);
  for (int k = 3; k <= degree; ++k) h.add_term(exponents({k}), coef(rng));
  return h;
}

std::vector<Series> relative_functions(std::mt19937_64& rng, int r, int degree) {
  std::uniform_int_distribution<int> coef(-3, 3), lead(1, 3);
  std::vector<Series> out;
  for (int i = 2; i <= r; ++i) {
    Series h(1, degree);
    h.add_term(exponents({i}), lead(rng));
    for (int k = i + 1; k <= std::min(degree, i + 2); ++k) h.add_term(exponents({k}), coef(rng));
    out.push_back(h);
  }
  return out;
}

RationalMatrix frame_matrix(std::mt19937_64& rng, int r) {
  RationalMatrix m = RationalMatrix::identity(static_cast<std::size_t>(r + 1));
  for (int i = 1; i <= r; ++i)
    for (int j = 0; j < i; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = small_rational(rng);
  return m;
}

GammaParams<Rational> params(std::mt19937_64& rng) {
  Rational a = small_rational(rng);
  Rational b = small_rational(rng);
  Rational g = small_rational(rng);
  return {a, b, g};
}

}  // namespace random_inputs

}  // namespace brieskorn::verify
