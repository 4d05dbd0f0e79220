#include "nlsa/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nlsa/error.hpp"

namespace nlsa {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::Parse, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) bad(where, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

Rational as_scalar(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  try {
    return Rational::parse(as_string(j, where));
  } catch (const Error& e) {
    bad(where, e.what());
  }
}

std::size_t lookup(const GradedSpace& space, const Json& j, const std::string& where) {
  const std::string name = as_string(j, where);
  const auto idx = space.find(name);
  if (!idx) bad(where, "unknown basis name '" + name + "'");
  return *idx;
}

std::vector<std::size_t> name_list(const GradedSpace& space, const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a list of basis names");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(lookup(space, j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

std::vector<std::string> names(const GradedSpace& space, std::span<const std::size_t> idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(space.name(i));
  return out;
}

Json name_json(const GradedSpace& space, std::span<const std::size_t> idx) {
  Json a = Json::array();
  for (auto i : idx) a.push_back(space.name(i));
  return a;
}

}  // namespace

std::string resolve_path(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
  if (const char* dir = std::getenv("NLSA_FIXTURES"); dir && fs::path(path).is_relative()) {
    const fs::path alt = fs::path(dir) / path;
    if (fs::exists(alt)) return alt.string();
  }
  throw Error(ErrorCode::UnknownName, "file not found: " + path);
}

Json read_json_file(const std::string& path) {
  const std::string p = resolve_path(path);
  std::ifstream in(p);
  if (!in) throw Error(ErrorCode::UnknownName, "cannot open " + p);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Parse, p + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::UnknownName, "cannot write " + path);
  out << j.dump(2) << '\n';
}

// ---------------------------------------------------------------------------

LoadedAlgebra parse_algebra(const Json& j) {
  const std::string name = as_string(field(j, "name", "algebra"), "name");
  const Json& nj = field(j, "n", "algebra");
  if (!nj.is_number_integer() || nj.get<long>() < 2) bad("n", "arity must be an integer >= 2");
  const auto n = static_cast<std::size_t>(nj.get<long>());

  const Json& bj = field(j, "basis", "algebra");
  if (!bj.is_array()) bad("basis", "expected a list");
  std::vector<BasisElement> basis;
  for (std::size_t k = 0; k < bj.size(); ++k) {
    const std::string where = "basis[" + std::to_string(k) + "]";
    const std::string bn = as_string(field(bj[k], "name", where), where + ".name");
    if (bn.empty()) bad(where, "empty basis name");
    Parity p{};
    try {
      p = parse_parity(as_string(field(bj[k], "parity", where), where + ".parity"));
    } catch (const Error& e) {
      bad(where + ".parity", e.what());
    }
    if (std::any_of(basis.begin(), basis.end(), [&](const BasisElement& b) { return b.name == bn; })) {
      bad(where, "duplicate basis name '" + bn + "'");
    }
    basis.push_back({bn, p});
  }
  GradedSpace space(std::move(basis));

  LoadedAlgebra out;
  BracketTable table(n, space.parities());
  const Json empty = Json::array();
  const Json& br = j.contains("brackets") ? j.at("brackets") : empty;
  if (!br.is_array()) bad("brackets", "expected a list");
  for (std::size_t k = 0; k < br.size(); ++k) {
    const std::string where = "brackets[" + std::to_string(k) + "]";
    const std::vector<std::size_t> args = name_list(space, field(br[k], "args", where), where + ".args");
    if (args.size() != n) bad(where + ".args", "expected " + std::to_string(n) + " arguments");
    const Json& vj = field(br[k], "value", where);
    if (!vj.is_object()) bad(where + ".value", "expected a map from basis names to scalars");
    Vec value(space.dim());
    for (const auto& [key, s] : vj.items()) {
      const auto idx = space.find(key);
      if (!idx) bad(where + ".value", "unknown basis name '" + key + "'");
      value[*idx] = as_scalar(s, where + ".value." + key);
    }
    if (auto defect = table.set(args, value)) {
      if (!out.skew_defect) out.skew_defect = AxiomViolation{"skew", names(space, args), *defect};
    }
  }
  out.algebra = NLieSuperalgebra(name, n, std::move(space), std::move(table).take());
  return out;
}

NLieSuperalgebra algebra_from_json(const Json& j) {
  LoadedAlgebra l = parse_algebra(j);
  if (l.skew_defect) bad("brackets", "skew symmetry violated: " + l.skew_defect->detail);
  return std::move(l.algebra);
}

Json algebra_to_json(const NLieSuperalgebra& g) {
  const GradedSpace& s = g.space();
  Json j;
  j["name"] = g.name();
  j["n"] = g.arity();
  Json basis = Json::array();
  for (const auto& b : s.basis()) basis.push_back({{"name", b.name}, {"parity", parity_name(b.parity)}});
  j["basis"] = basis;
  Json br = Json::array();
  for (const auto& [w, v] : g.constants()) {
    Json value = Json::object();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) value[s.name(i)] = v[i].str();
    }
    br.push_back({{"args", name_json(s, w)}, {"value", value}});
  }
  j["brackets"] = br;
  return j;
}

// ---------------------------------------------------------------------------

Matrix form_from_json(const GradedSpace& space, const Json& j) {
  const Json& fj = field(j, "form", "form file");
  if (!fj.is_array()) bad("form", "expected a list");
  const std::size_t d = space.dim();
  Matrix gram(d, d);
  std::vector<bool> set(d * d, false);
  auto put = [&](std::size_t a, std::size_t b, const Rational& v, const std::string& where) {
    if (set[a * d + b] && gram(a, b) != v) bad(where, "conflicting values for <" + space.name(a) + ", " + space.name(b) + ">");
    gram(a, b) = v;
    set[a * d + b] = true;
  };
  for (std::size_t k = 0; k < fj.size(); ++k) {
    const std::string where = "form[" + std::to_string(k) + "]";
    const std::size_t x = lookup(space, field(fj[k], "x", where), where + ".x");
    const std::size_t y = lookup(space, field(fj[k], "y", where), where + ".y");
    const Rational v = as_scalar(field(fj[k], "value", where), where + ".value");
    if (!v.is_zero() && space.parity(x) != space.parity(y)) bad(where, "a consistent form cannot pair opposite parities");
    put(x, y, v, where);
    put(y, x, Rational(koszul(space.parity(x), space.parity(y))) * v, where);
  }
  return gram;
}

Json form_to_json(const GradedSpace& space, const Matrix& gram) {
  Json list = Json::array();
  for (std::size_t x = 0; x < space.dim(); ++x) {
    for (std::size_t y = x; y < space.dim(); ++y) {
      if (!gram(x, y).is_zero()) list.push_back({{"x", space.name(x)}, {"y", space.name(y)}, {"value", gram(x, y).str()}});
    }
  }
  return Json{{"form", list}};
}

// ---------------------------------------------------------------------------

Cochain cochain_from_json(const Representation& rho, const Json& j) {
  const NLieSuperalgebra& g = rho.algebra();
  const GradedSpace& gs = g.space();
  const Json& dj = field(j, "degree", "cochain");
  if (!dj.is_number_integer() || dj.get<long>() < 0) bad("degree", "expected a nonnegative integer");
  const auto m = static_cast<std::size_t>(dj.get<long>());
  Parity p{};
  try {
    p = parse_parity(as_string(field(j, "parity", "cochain"), "parity"));
  } catch (const Error& e) {
    bad("parity", e.what());
  }
  const bool complete = j.contains("complete") && j.at("complete").is_boolean() && j.at("complete").get<bool>();
  if (complete && m == 0) bad("complete", "completion needs degree >= 1");

  const CochainSpace s(rho, m);
  Cochain f = Cochain::zero(s, p);
  std::vector<bool> set(s.size(), false);
  const std::size_t dv = s.target_dim();
  const std::size_t n = g.arity();

  auto put = [&](const std::vector<std::size_t>& words, std::size_t z, std::size_t u, const Rational& v,
                 const std::string& where) {
    const std::size_t c = s.encode(words, z) * dv + u;
    if (set[c] && f.coefficients[c] != v) bad(where, "conflicting values for one coordinate");
    set[c] = true;
    f.coefficients[c] = v;
  };

  const Json& ej = field(j, "entries", "cochain");
  if (!ej.is_array()) bad("entries", "expected a list");
  for (std::size_t k = 0; k < ej.size(); ++k) {
    const std::string where = "entries[" + std::to_string(k) + "]";
    const Json& aj = field(ej[k], "args", where);
    if (!aj.is_array() || aj.size() != m + 1) bad(where + ".args", "expected " + std::to_string(m) + " words and one basis name");
    std::vector<Word> raw;
    std::vector<std::size_t> words;
    int sign = 1;
    bool vanishes = false;
    for (std::size_t b = 0; b < m; ++b) {
      const Word w = name_list(gs, aj[b], where + ".args[" + std::to_string(b) + "]");
      if (w.size() + 1 != n) bad(where + ".args", "each word needs " + std::to_string(n - 1) + " names");
      raw.push_back(w);
      const auto c = canonicalize(w, g.parities());
      if (!c) {
        vanishes = true;
        continue;
      }
      sign *= c->sign;
      words.push_back(*rho.words().find(c->word));
    }
    const std::size_t z = lookup(gs, aj[m], where + ".args[" + std::to_string(m) + "]");
    const std::size_t u = lookup(rho.target(), field(ej[k], "target", where), where + ".target");
    const Rational v = as_scalar(field(ej[k], "value", where), where + ".value");
    if (v.is_zero()) continue;
    if (vanishes) bad(where, "value on a word with a repeated even entry");
    Parity cp = rho.target().parity(u) + gs.parity(z);
    for (const Word& w : raw) cp += word_parity(w, g.parities());
    if (cp != p) throw Error(ErrorCode::NotHomogeneous, where + ": entry has the wrong parity for a " + parity_name(p) + " cochain");

    if (!complete) {
      put(words, z, u, Rational(sign) * v, where);
      continue;
    }
    // super-antisymmetric extension over (last word, z)
    Word tuple = raw.back();
    tuple.push_back(z);
    const auto base = canonicalize(tuple, g.parities());
    if (!base) bad(where, "value on a tuple with a repeated even entry");
    const Rational canonical_value = Rational(base->sign) * v;  // value on the canonical tuple
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::vector<std::size_t> prefix(words.begin(), words.end() - 1);
    int prefix_sign = 1;
    for (std::size_t b = 0; b + 1 < m; ++b) prefix_sign *= canonicalize(raw[b], g.parities())->sign;
    do {
      Word t(n);
      for (std::size_t i = 0; i < n; ++i) t[i] = base->word[order[i]];
      const auto c = canonicalize(t, g.parities());
      const Word last(t.begin(), t.end() - 1);
      const auto cl = canonicalize(last, g.parities());
      if (!cl) continue;
      std::vector<std::size_t> ws = prefix;
      ws.push_back(*rho.words().find(cl->word));
      // f(.., t) = c->sign * f(.., canonical); stored on the canonical last word with cl->sign
      put(ws, t.back(), u, Rational(prefix_sign * c->sign * cl->sign) * canonical_value, where);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return f;
}

Json cochain_to_json(const Representation& rho, const Cochain& f) {
  const GradedSpace& gs = rho.algebra().space();
  const CochainSpace s(rho, f.degree);
  Json entries = Json::array();
  std::vector<std::size_t> ws;
  std::size_t z = 0;
  for (std::size_t c = 0; c < s.size(); ++c) {
    if (f.coefficients[c].is_zero()) continue;
    s.decode(c / s.target_dim(), ws, z);
    Json args = Json::array();
    for (auto w : ws) args.push_back(name_json(gs, rho.words().word(w)));
    args.push_back(gs.name(z));
    entries.push_back({{"args", args}, {"target", rho.target().name(c % s.target_dim())}, {"value", f.coefficients[c].str()}});
  }
  Json j;
  j["degree"] = f.degree;
  j["parity"] = parity_name(f.parity);
  j["entries"] = entries;
  return j;
}

Representation representation_from_json(const NLieSuperalgebra& base, const GradedSpace& target, const Json& j) {
  const WedgeBasis words = fundamental_basis(base);
  std::vector<Matrix> mats(words.size(), Matrix(target.dim(), target.dim()));
  std::vector<bool> set(words.size() * target.dim() * target.dim(), false);
  const Json& aj = field(j, "action", "action file");
  if (!aj.is_array()) bad("action", "expected a list");
  for (std::size_t k = 0; k < aj.size(); ++k) {
    const std::string where = "action[" + std::to_string(k) + "]";
    const Word w = name_list(base.space(), field(aj[k], "args", where), where + ".args");
    if (w.size() + 1 != base.arity()) bad(where + ".args", "expected " + std::to_string(base.arity() - 1) + " names");
    const std::size_t src = lookup(target, field(aj[k], "source", where), where + ".source");
    const std::size_t dst = lookup(target, field(aj[k], "target", where), where + ".target");
    const Rational v = as_scalar(field(aj[k], "value", where), where + ".value");
    const auto c = canonicalize(w, base.parities());
    if (!c) {
      if (!v.is_zero()) bad(where, "value on a word with a repeated even entry");
      continue;
    }
    const std::size_t wi = *words.find(c->word);
    const Rational val = Rational(c->sign) * v;
    const std::size_t key = (wi * target.dim() + dst) * target.dim() + src;
    if (set[key] && mats[wi](dst, src) != val) bad(where, "conflicting values for one entry");
    set[key] = true;
    mats[wi](dst, src) = val;
  }
  return Representation(base, target, std::move(mats), "file");
}

std::string format_vector(const GradedSpace& space, std::span<const Rational> v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const Rational a = v[i].sign() < 0 ? -v[i] : v[i];
    if (first) {
      if (v[i].sign() < 0) os << "-";
    } else {
      os << (v[i].sign() < 0 ? " - " : " + ");
    }
    if (a != Rational(1)) os << a.str() << " ";
    os << space.name(i);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace nlsa
