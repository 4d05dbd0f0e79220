#include "nlsa/algebra.hpp"

#include <algorithm>
#include <functional>

#include "nlsa/error.hpp"

namespace nlsa {

NLieSuperalgebra::NLieSuperalgebra(std::string name, std::size_t n, GradedSpace space, Constants constants)
    : name_(std::move(name)), n_(n), space_(std::move(space)) {
  if (n_ < 2) throw Error(ErrorCode::ArityMismatch, "arity must be at least 2");
  for (auto& [key, value] : constants) {
    if (key.size() != n_) throw Error(ErrorCode::ArityMismatch, "structure constant key of wrong length");
    for (auto i : key) {
      if (i >= dim()) throw Error(ErrorCode::DimensionMismatch, "structure constant key out of range");
    }
    if (!is_canonical(key, parities())) throw Error(ErrorCode::Parse, "structure constant key is not canonical");
    if (value.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "structure constant value length");
    if (nlsa::is_zero(value)) continue;
    constants_.emplace(key, std::move(value));
  }
}

Vec NLieSuperalgebra::bracket_basis(std::span<const std::size_t> args) const {
  if (args.size() != n_) throw Error(ErrorCode::ArityMismatch, "bracket needs " + std::to_string(n_) + " arguments");
  for (auto i : args) {
    if (i >= dim()) throw Error(ErrorCode::DimensionMismatch, "bracket argument out of range");
  }
  Vec out(dim());
  const auto c = canonicalize(args, parities());
  if (!c) return out;
  auto it = constants_.find(c->word);
  if (it == constants_.end()) return out;
  out = it->second;
  if (c->sign < 0) {
    for (auto& x : out) x = -x;
  }
  return out;
}

Vec NLieSuperalgebra::bracket(std::span<const Vec> args) const {
  if (args.size() != n_) throw Error(ErrorCode::ArityMismatch, "bracket needs " + std::to_string(n_) + " arguments");
  for (const auto& a : args) {
    if (a.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "bracket argument length");
  }
  Vec out(dim());
  Word idx(n_);
  std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t slot, const Rational& coef) {
    if (slot == n_) {
      const auto c = canonicalize(idx, parities());
      if (!c) return;
      auto it = constants_.find(c->word);
      if (it != constants_.end()) axpy(out, coef * Rational(c->sign), it->second);
      return;
    }
    for (std::size_t k = 0; k < dim(); ++k) {
      if (args[slot][k].is_zero()) continue;
      idx[slot] = k;
      rec(slot + 1, coef * args[slot][k]);
    }
  };
  rec(0, Rational(1));
  return out;
}

NLieSuperalgebra NLieSuperalgebra::renamed(std::string name) const {
  NLieSuperalgebra g = *this;
  g.name_ = std::move(name);
  return g;
}

std::optional<std::string> BracketTable::set(std::span<const std::size_t> args, const Vec& value) {
  if (args.size() != n_) throw Error(ErrorCode::ArityMismatch, "bracket entry of wrong arity");
  const auto c = canonicalize(args, parities_);
  if (!c) {
    if (!nlsa::is_zero(value)) return "bracket with a repeated even argument must vanish";
    return std::nullopt;
  }
  Vec v = value;
  if (c->sign < 0) {
    for (auto& x : v) x = -x;
  }
  auto [it, inserted] = constants_.emplace(c->word, v);
  if (!inserted && it->second != v) return "conflicting values for the same bracket up to super-skew sign";
  return std::nullopt;
}

void BracketTable::add(std::span<const std::size_t> args, const Vec& value) {
  if (args.size() != n_) throw Error(ErrorCode::ArityMismatch, "bracket entry of wrong arity");
  const auto c = canonicalize(args, parities_);
  if (!c) return;
  auto [it, inserted] = constants_.try_emplace(c->word, Vec(value.size()));
  axpy(it->second, Rational(c->sign), value);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> names_of(const NLieSuperalgebra& g, std::span<const std::size_t> idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(g.space().name(i));
  return out;
}

// Calls f on every tuple in {0..d-1}^len until it returns false.
bool for_each_tuple(std::size_t d, std::size_t len, const std::function<bool(const Word&)>& f) {
  Word t(len, 0);
  if (d == 0) return len == 0 ? f(t) : true;
  while (true) {
    if (!f(t)) return false;
    std::size_t i = len;
    while (i > 0) {
      if (++t[i - 1] < d) break;
      t[i - 1] = 0;
      --i;
    }
    if (i == 0) return true;
  }
}

std::string vec_str(const NLieSuperalgebra& g, const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + v[i].str() + ")" + g.space().name(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

AxiomReport check_axioms(const NLieSuperalgebra& g) {
  AxiomReport rep;
  const auto& par = g.parities();
  const std::size_t n = g.arity();
  const std::size_t d = g.dim();

  // grading
  for (const auto& [key, value] : g.constants()) {
    const auto p = parity_of(value, par);
    if (!p || *p != word_parity(key, par)) {
      rep.grading = false;
      if (!rep.violation) {
        rep.violation = AxiomViolation{"grading", names_of(g, key),
                                       "bracket value " + vec_str(g, value) + " has the wrong parity"};
      }
      break;
    }
  }

  // Dense table of brackets on all basis tuples; index = base-d digits.
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= d;
  std::vector<SparseRow> table(total);
  auto code = [&](std::span<const std::size_t> t) {
    std::size_t c = 0;
    for (auto i : t) c = c * d + i;
    return c;
  };
  for_each_tuple(d, n, [&](const Word& t) {
    const Vec v = g.bracket_basis(t);
    SparseRow& r = table[code(t)];
    for (std::size_t k = 0; k < d; ++k) {
      if (!v[k].is_zero()) r.emplace_back(k, v[k]);
    }
    return true;
  });

  // skew symmetry: checked on the derived brackets, so it guards the accessor itself.
  for_each_tuple(d, n, [&](const Word& t) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Word s = t;
      std::swap(s[i], s[i + 1]);
      SparseRow lhs = table[code(t)];
      SparseRow rhs = table[code(s)];
      const Rational sg(swap_sign(par[t[i]], par[t[i + 1]]));
      for (auto& [k, c] : rhs) c *= sg;
      if (lhs != rhs) {
        rep.skew = false;
        if (!rep.violation) rep.violation = AxiomViolation{"skew", names_of(g, t), "super-skew symmetry fails"};
        return false;
      }
    }
    return true;
  });

  // Filippov: [x_1..x_{n-1},[y_1..y_n]] = sum_i (-1)^{|X|(|y_1|+..+|y_{i-1}|)} [y_1,..,[x,y_i],..,y_n]
  Word inner(n);
  auto bracket_with = [&](Word& slots, std::size_t pos, const SparseRow& v, Vec& acc, const Rational& coef) {
    const std::size_t saved = slots[pos];
    for (const auto& [k, c] : v) {
      slots[pos] = k;
      for (const auto& [j, e] : table[code(slots)]) acc[j] += coef * c * e;
    }
    slots[pos] = saved;
  };
  for_each_tuple(d, n - 1, [&](const Word& x) {
    const Parity px = word_parity(x, par);
    std::copy(x.begin(), x.end(), inner.begin());
    return for_each_tuple(d, n, [&](const Word& y) {
      Vec lhs(d), rhs(d);
      inner.back() = 0;
      bracket_with(inner, n - 1, table[code(y)], lhs, Rational(1));
      Word ys = y;
      int sign = 1;
      for (std::size_t i = 0; i < n; ++i) {
        inner.back() = y[i];
        const SparseRow& xy = table[code(inner)];
        bracket_with(ys, i, xy, rhs, Rational(sign));
        sign *= koszul(px, par[y[i]]);
      }
      if (lhs != rhs) {
        rep.filippov = false;
        if (!rep.violation) {
          std::vector<std::string> args = names_of(g, x);
          auto ny = names_of(g, y);
          args.insert(args.end(), ny.begin(), ny.end());
          rep.violation = AxiomViolation{"filippov", std::move(args),
                                         "left side " + vec_str(g, lhs) + " but right side " + vec_str(g, rhs)};
        }
        return false;
      }
      return true;
    });
  });
  return rep;
}

// ---------------------------------------------------------------------------

GradedSubspace whole(const NLieSuperalgebra& g) { return GradedSubspace::full(g.parities()); }
GradedSubspace nothing(const NLieSuperalgebra& g) { return GradedSubspace::zero(g.parities()); }

GradedSubspace bracket_span(const NLieSuperalgebra& g, const std::vector<GradedSubspace>& slots) {
  if (slots.size() != g.arity()) throw Error(ErrorCode::ArityMismatch, "bracket_span slot count");
  for (const auto& s : slots) {
    if (s.parities() != g.parities()) throw Error(ErrorCode::AmbientMismatch, "bracket_span");
    if (s.is_zero()) return nothing(g);
  }
  const bool all_full = std::all_of(slots.begin(), slots.end(), [](const auto& s) { return s.is_full(); });
  std::vector<Vec> gens;
  if (all_full) {
    for (const auto& [k, v] : g.constants()) gens.push_back(v);
  } else {
    std::vector<Vec> args(g.arity());
    std::function<void(std::size_t)> rec = [&](std::size_t slot) {
      if (slot == g.arity()) {
        Vec v = g.bracket(args);
        if (!nlsa::is_zero(v)) gens.push_back(std::move(v));
        return;
      }
      for (std::size_t r = 0; r < slots[slot].dim(); ++r) {
        args[slot] = slots[slot].basis_vector(r);
        rec(slot + 1);
      }
    };
    rec(0);
  }
  return GradedSubspace::span(g.parities(), gens, true);
}

namespace {

std::vector<GradedSubspace> with_first(const NLieSuperalgebra& g, const std::vector<GradedSubspace>& head) {
  std::vector<GradedSubspace> s = head;
  while (s.size() < g.arity()) s.push_back(whole(g));
  return s;
}

}  // namespace

bool is_graded_ideal(const NLieSuperalgebra& g, const GradedSubspace& ideal) {
  return ideal.contains(bracket_span(g, with_first(g, {ideal})));
}

bool is_abelian_ideal(const NLieSuperalgebra& g, const GradedSubspace& ideal) {
  return is_graded_ideal(g, ideal) && bracket_span(g, with_first(g, {ideal, ideal})).is_zero();
}

SeriesReport series(const NLieSuperalgebra& g) {
  SeriesReport rep;
  const std::size_t cap = g.dim() + 1;

  rep.derived.push_back(whole(g));
  while (!rep.derived.back().is_zero() && rep.derived.size() <= cap) {
    const GradedSubspace& cur = rep.derived.back();
    GradedSubspace next = bracket_span(g, std::vector<GradedSubspace>(g.arity(), cur));
    const bool stable = next == cur;
    rep.derived.push_back(std::move(next));
    if (stable) break;
  }
  if (rep.derived.back().is_zero()) rep.solvable_length = rep.derived.size() - 1;

  rep.lower_central.push_back(whole(g));
  while (!rep.lower_central.back().is_zero() && rep.lower_central.size() <= cap) {
    const GradedSubspace& cur = rep.lower_central.back();
    GradedSubspace next = bracket_span(g, with_first(g, {cur}));
    const bool stable = next == cur;
    rep.lower_central.push_back(std::move(next));
    if (stable) break;
  }
  if (rep.lower_central.back().is_zero()) rep.nilpotent_length = rep.lower_central.size() - 1;

  rep.centralizer.push_back(nothing(g));
  while (rep.centralizer.size() <= cap) {
    GradedSubspace next = centralizer(g, rep.centralizer.back());
    const bool stable = next == rep.centralizer.back();
    if (stable) break;
    rep.centralizer.push_back(std::move(next));
  }
  return rep;
}

namespace {

// {x | [x, s_2, ..., s_n] in target for basis vectors of the slot subspaces}
GradedSubspace solve_first_slot(const NLieSuperalgebra& g, const std::vector<GradedSubspace>& rest,
                                const GradedSubspace& target) {
  const std::size_t d = g.dim();
  const Matrix ann = target.annihilator();
  std::vector<SparseRow> eqs;
  std::vector<Vec> args(g.arity());
  // Each choice of the remaining slots gives the linear map x -> [x, ...]; its
  // composition with the annihilator of the target must vanish.
  std::function<void(std::size_t)> rec = [&](std::size_t slot) {
    if (slot == g.arity()) {
      Matrix m(d, d);  // column x = [e_x, ...]
      for (std::size_t x = 0; x < d; ++x) {
        args[0] = unit_vec(d, x);
        const Vec v = g.bracket(args);
        for (std::size_t k = 0; k < d; ++k) m(k, x) = v[k];
      }
      const Matrix cond = ann * m;
      for (std::size_t r = 0; r < cond.rows(); ++r) {
        SparseRow row;
        for (std::size_t c = 0; c < d; ++c) {
          if (!cond(r, c).is_zero()) row.emplace_back(c, cond(r, c));
        }
        if (!row.empty()) eqs.push_back(std::move(row));
      }
      return;
    }
    const GradedSubspace& s = rest[slot - 1];
    for (std::size_t r = 0; r < s.dim(); ++r) {
      args[slot] = s.basis_vector(r);
      rec(slot + 1);
    }
  };
  rec(1);
  return GradedSubspace::span(g.parities(), sparse_kernel(eqs, d));
}

}  // namespace

GradedSubspace centralizer(const NLieSuperalgebra& g, const GradedSubspace& v) {
  return solve_first_slot(g, std::vector<GradedSubspace>(g.arity() - 1, whole(g)), v);
}

GradedSubspace center_of_ideal(const NLieSuperalgebra& g, const GradedSubspace& ideal) {
  std::vector<GradedSubspace> rest(g.arity() - 1, whole(g));
  rest[0] = ideal;
  return solve_first_slot(g, rest, nothing(g));
}

Quotient quotient(const NLieSuperalgebra& g, const GradedSubspace& ideal) {
  if (ideal.parities() != g.parities()) throw Error(ErrorCode::AmbientMismatch, "quotient");
  if (!is_graded_ideal(g, ideal)) throw Error(ErrorCode::NotAnIdeal, "subspace is not a graded ideal");
  const std::vector<std::size_t> lifts = ideal.complement_indices();
  const std::size_t q = lifts.size();
  std::vector<BasisElement> basis;
  for (auto i : lifts) basis.push_back(g.space().basis()[i]);
  GradedSpace space(std::move(basis));

  // projection: reduce modulo I, then read off the complement coordinates
  Matrix proj(q, g.dim());
  for (std::size_t c = 0; c < g.dim(); ++c) {
    const Vec r = ideal.reduce(unit_vec(g.dim(), c));
    for (std::size_t k = 0; k < q; ++k) proj(k, c) = r[lifts[k]];
  }

  NLieSuperalgebra::Constants consts;
  const WedgeBasis words(space.parities(), g.arity());
  for (const Word& w : words.words()) {
    Word args;
    for (auto k : w) args.push_back(lifts[k]);
    Vec v = proj * g.bracket_basis(args);
    if (!nlsa::is_zero(v)) consts.emplace(w, std::move(v));
  }
  return {NLieSuperalgebra(g.name() + "/I", g.arity(), std::move(space), std::move(consts)), std::move(proj), lifts};
}

NLieSuperalgebra direct_sum(const NLieSuperalgebra& g1, const NLieSuperalgebra& g2) {
  if (g1.arity() != g2.arity()) throw Error(ErrorCode::ArityMismatch, "direct sum of algebras of different arity");
  std::vector<BasisElement> basis = g1.space().basis();
  for (BasisElement b : g2.space().basis()) {
    while (g1.space().find(b.name) || std::any_of(basis.begin() + g1.dim(), basis.end(),
                                                  [&](const BasisElement& e) { return e.name == b.name; })) {
      b.name += "'";
    }
    basis.push_back(std::move(b));
  }
  const std::size_t d = g1.dim() + g2.dim();
  NLieSuperalgebra::Constants consts;
  for (const auto& [k, v] : g1.constants()) {
    Vec w(d);
    std::copy(v.begin(), v.end(), w.begin());
    consts.emplace(k, std::move(w));
  }
  for (const auto& [k, v] : g2.constants()) {
    Word key;
    for (auto i : k) key.push_back(i + g1.dim());
    Vec w(d);
    std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(g1.dim()));
    consts.emplace(std::move(key), std::move(w));
  }
  return NLieSuperalgebra(g1.name() + "+" + g2.name(), g1.arity(), GradedSpace(std::move(basis)), std::move(consts));
}

NLieSuperalgebra permute_basis(const NLieSuperalgebra& g, std::span<const std::size_t> perm) {
  const std::size_t d = g.dim();
  if (perm.size() != d) throw Error(ErrorCode::DimensionMismatch, "permutation length");
  std::vector<std::size_t> inv(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (perm[i] >= d || inv[perm[i]] != d) throw Error(ErrorCode::DimensionMismatch, "not a permutation");
    inv[perm[i]] = i;
  }
  std::vector<BasisElement> basis;
  for (auto p : perm) basis.push_back(g.space().basis()[p]);
  GradedSpace space(std::move(basis));
  BracketTable table(g.arity(), space.parities());
  for (const auto& [k, v] : g.constants()) {
    Word key;
    for (auto i : k) key.push_back(inv[i]);
    Vec w(d);
    for (std::size_t i = 0; i < d; ++i) w[inv[i]] = v[i];
    table.add(key, w);
  }
  return NLieSuperalgebra(g.name(), g.arity(), std::move(space), std::move(table).take());
}

std::optional<std::vector<std::string>> homomorphism_defect(const NLieSuperalgebra& g, const NLieSuperalgebra& h,
                                                           const Matrix& phi) {
  if (g.arity() != h.arity()) throw Error(ErrorCode::ArityMismatch, "homomorphism between different arities");
  if (phi.rows() != h.dim() || phi.cols() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "homomorphism");
  std::vector<Vec> images;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Vec col = phi.col_vec(i);
    const auto p = parity_of(col, h.parities());
    if (!nlsa::is_zero(col) && (!p || *p != g.space().parity(i))) {
      return std::vector<std::string>{g.space().name(i)};
    }
    images.push_back(std::move(col));
  }
  std::optional<std::vector<std::string>> bad;
  std::vector<Vec> args(g.arity());
  for_each_tuple(g.dim(), g.arity(), [&](const Word& t) {
    if (!is_canonical(t, g.parities())) return true;
    for (std::size_t i = 0; i < t.size(); ++i) args[i] = images[t[i]];
    if (phi * g.bracket_basis(t) != h.bracket(args)) {
      bad = names_of(g, t);
      return false;
    }
    return true;
  });
  return bad;
}

}  // namespace nlsa
