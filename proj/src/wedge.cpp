#include "nlsa/wedge.hpp"

#include <algorithm>
#include <functional>

#include "nlsa/algebra.hpp"
#include "nlsa/error.hpp"

namespace nlsa {

std::optional<SignedWord> canonicalize(std::span<const std::size_t> indices, const std::vector<Parity>& parities) {
  SignedWord out{1, Word(indices.begin(), indices.end())};
  Word& w = out.word;
  // insertion sort, tracking the sign of each adjacent swap
  for (std::size_t i = 1; i < w.size(); ++i) {
    for (std::size_t j = i; j > 0 && w[j - 1] > w[j]; --j) {
      out.sign *= swap_sign(parities[w[j - 1]], parities[w[j]]);
      std::swap(w[j - 1], w[j]);
    }
  }
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1] && !is_odd(parities[w[i]])) return std::nullopt;
  }
  return out;
}

Parity word_parity(std::span<const std::size_t> word, const std::vector<Parity>& parities) {
  Parity p = Parity::even;
  for (auto i : word) p += parities[i];
  return p;
}

bool is_canonical(std::span<const std::size_t> word, const std::vector<Parity>& parities) {
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i] < word[i - 1]) return false;
    if (word[i] == word[i - 1] && !is_odd(parities[word[i]])) return false;
  }
  return true;
}

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::size_t WedgeBasis::expected_size(std::size_t dim_even, std::size_t dim_odd, std::size_t k) {
  std::size_t total = 0;
  for (std::size_t j = 0; j <= k; ++j) {
    const std::size_t rest = k - j;
    const std::size_t sym = rest == 0 ? 1 : (dim_odd == 0 ? 0 : binom(dim_odd + rest - 1, rest));
    total += binom(dim_even, j) * sym;
  }
  return total;
}

WedgeBasis::WedgeBasis(std::vector<Parity> parities, std::size_t k) : parities_(std::move(parities)), k_(k) {
  Word cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k_) {
      index_.emplace(cur, words_.size());
      word_parities_.push_back(word_parity(cur, parities_));
      words_.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < parities_.size(); ++i) {
      cur.push_back(i);
      rec(is_odd(parities_[i]) ? i : i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

std::optional<std::size_t> WedgeBasis::find(std::span<const std::size_t> canonical) const {
  auto it = index_.find(Word(canonical.begin(), canonical.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vec WedgeBasis::wedge_of(std::span<const std::size_t> indices) const {
  if (indices.size() != k_) throw Error(ErrorCode::ArityMismatch, "wedge_of");
  Vec v(size());
  if (auto c = canonicalize(indices, parities_)) v[*find(c->word)] = Rational(c->sign);
  return v;
}

WedgeBasis fundamental_basis(const NLieSuperalgebra& g) { return WedgeBasis(g.parities(), g.arity() - 1); }

Vec act(const NLieSuperalgebra& g, std::span<const Rational> fundamental, std::span<const Rational> z) {
  const WedgeBasis wb = fundamental_basis(g);
  if (fundamental.size() != wb.size() || z.size() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "act");
  Vec out(g.dim());
  Word args(g.arity());
  for (std::size_t w = 0; w < wb.size(); ++w) {
    if (fundamental[w].is_zero()) continue;
    std::copy(wb.word(w).begin(), wb.word(w).end(), args.begin());
    for (std::size_t k = 0; k < g.dim(); ++k) {
      if (z[k].is_zero()) continue;
      args.back() = k;
      axpy(out, fundamental[w] * z[k], g.bracket_basis(args));
    }
  }
  return out;
}

FundamentalTables::FundamentalTables(const NLieSuperalgebra& g) : basis_(fundamental_basis(g)), dim_(g.dim()) {
  const std::size_t nw = basis_.size();
  const auto& par = g.parities();
  action_.resize(nw * dim_);
  Word args(g.arity());
  for (std::size_t w = 0; w < nw; ++w) {
    std::copy(basis_.word(w).begin(), basis_.word(w).end(), args.begin());
    for (std::size_t z = 0; z < dim_; ++z) {
      args.back() = z;
      const Vec v = g.bracket_basis(args);
      SparseRow& row = action_[w * dim_ + z];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!v[k].is_zero()) row.emplace_back(k, v[k]);
      }
    }
  }
  compose_.resize(nw * nw);
  for (std::size_t a = 0; a < nw; ++a) {
    const Parity pa = basis_.parity(a);
    for (std::size_t b = 0; b < nw; ++b) {
      const Word& y = basis_.word(b);
      SparseRow& out = compose_[a * nw + b];
      int prefix_sign = 1;
      for (std::size_t i = 0; i < y.size(); ++i) {
        Word t = y;
        for (const auto& [k, c] : action_[a * dim_ + y[i]]) {
          t[i] = k;
          if (auto cw = canonicalize(t, par)) out.emplace_back(*basis_.find(cw->word), c * Rational(prefix_sign * cw->sign));
        }
        prefix_sign *= koszul(pa, par[y[i]]);
      }
      normalize(out);
    }
  }
}

Vec compose(const NLieSuperalgebra& g, std::span<const Rational> x, std::span<const Rational> y) {
  const FundamentalTables t(g);
  const std::size_t nw = t.basis().size();
  if (x.size() != nw || y.size() != nw) throw Error(ErrorCode::DimensionMismatch, "compose");
  Vec out(nw);
  for (std::size_t a = 0; a < nw; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < nw; ++b) {
      if (y[b].is_zero()) continue;
      for (const auto& [k, c] : t.composition(a, b)) out[k] += x[a] * y[b] * c;
    }
  }
  return out;
}

}  // namespace nlsa
