#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "nlsa/error.hpp"
#include "nlsa/representation.hpp"

namespace nlsa {

/// Overflow-checked 64-bit integer; used as a fast exact coefficient ring when
/// every structure constant and module entry is an integer.
class CheckedInt {
 public:
  struct Overflow {};

  CheckedInt() = default;
  CheckedInt(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit CheckedInt(std::int64_t v) : v_(v) {}

  [[nodiscard]] static std::optional<CheckedInt> from(const Rational& r) {
    if (!r.is_integer() || !r.raw().get_num().fits_slong_p()) return std::nullopt;
    return CheckedInt(static_cast<std::int64_t>(r.raw().get_num().get_si()));
  }
  [[nodiscard]] Rational to_rational() const { return Rational(static_cast<long>(v_)); }
  [[nodiscard]] bool is_zero() const { return v_ == 0; }
  [[nodiscard]] std::int64_t value() const { return v_; }

  CheckedInt& operator+=(CheckedInt o) {
    if (__builtin_add_overflow(v_, o.v_, &v_)) throw Overflow{};
    return *this;
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return CheckedInt(r);
  }
  friend bool operator==(CheckedInt, CheckedInt) = default;

 private:
  std::int64_t v_ = 0;
};

inline Rational to_rational(const Rational& r) { return r; }
inline Rational to_rational(CheckedInt c) { return c.to_rational(); }

template <class Coef>
std::optional<Coef> convert_coef(const Rational& r) {
  if constexpr (std::is_same_v<Coef, Rational>) {
    return r;
  } else {
    return Coef::from(r);
  }
}

/// Symbolic vector over V whose coefficients are linear forms: each term is
/// coefficient * unknown(key) in component `comp`.
template <class Coef>
struct BasicSymTerm {
  std::uint32_t comp;
  std::uint64_t key;
  Coef coef;
};

template <class Coef>
using BasicSymVec = std::vector<BasicSymTerm<Coef>>;

template <class Coef>
void normalize(BasicSymVec<Coef>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return a.comp != b.comp ? a.comp < b.comp : a.key < b.key;
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (out > 0 && v[out - 1].comp == v[i].comp && v[out - 1].key == v[i].key) {
      v[out - 1].coef += v[i].coef;
    } else {
      if (out > 0 && v[out - 1].coef.is_zero()) --out;
      if (out != i) v[out] = std::move(v[i]);
      ++out;
    }
  }
  if (out > 0 && v[out - 1].coef.is_zero()) --out;
  v.resize(out);
}

/// Evaluates the coboundary formula on one domain point, given the values of f
/// on domain points one degree lower. Throws CheckedInt::Overflow for the
/// integer instantiation, and DimensionMismatch from the constructor if some
/// constant is not representable in Coef.
template <class Coef>
class BasicDeltaEngine {
 public:
  using SymVec = BasicSymVec<Coef>;
  using Column = std::vector<std::pair<std::size_t, Coef>>;
  using Eval = std::function<SymVec(std::span<const std::size_t> words, std::size_t z)>;

  explicit BasicDeltaEngine(const Representation& rho)
      : rho_(&rho),
        dg_(rho.algebra().dim()),
        dv_(rho.target().dim()),
        nw_(rho.words().size()),
        n_(rho.algebra().arity()),
        gp_(rho.algebra().parities()),
        vp_(rho.target().parities()) {
    const FundamentalTables tables(rho.algebra());
    for (std::size_t w = 0; w < nw_; ++w) wp_.push_back(rho.words().parity(w));
    action_.resize(nw_ * dg_);
    for (std::size_t w = 0; w < nw_; ++w) {
      for (std::size_t z = 0; z < dg_; ++z) action_[w * dg_ + z] = convert(tables.action(w, z));
    }
    compose_.resize(nw_ * nw_);
    for (std::size_t a = 0; a < nw_; ++a) {
      for (std::size_t b = 0; b < nw_; ++b) compose_[a * nw_ + b] = convert(tables.composition(a, b));
    }

    rho_cols_.resize(nw_ * dv_);
    acts_.assign(nw_, false);
    for (std::size_t w = 0; w < nw_; ++w) {
      const Matrix& m = rho.matrix(w);
      for (std::size_t u = 0; u < dv_; ++u) {
        for (std::size_t k = 0; k < dv_; ++k) {
          if (!m(k, u).is_zero()) rho_cols_[w * dv_ + u].emplace_back(k, coef(m(k, u)));
        }
        if (!rho_cols_[w * dv_ + u].empty()) acts_[w] = true;
      }
    }

    // [X^1, .., v, .., X^{n-1}, z]: move v to the last slot, then apply rho.
    const std::size_t slots = n_ - 1;
    slot_cols_.resize(nw_ * slots * dg_ * dv_);
    slot_nonzero_.assign(nw_ * slots * dg_, false);
    for (std::size_t w = 0; w < nw_; ++w) {
      const Word& x = rho.words().word(w);
      for (std::size_t i = 0; i < slots; ++i) {
        for (std::size_t z = 0; z < dg_; ++z) {
          Word rest;
          for (std::size_t j = 0; j < slots; ++j) {
            if (j != i) rest.push_back(x[j]);
          }
          rest.push_back(z);
          const Matrix m = rho.of_indices(rest);
          const std::size_t base = (w * slots + i) * dg_ + z;
          for (std::size_t u = 0; u < dv_; ++u) {
            int sign = 1;
            for (std::size_t j = i + 1; j < slots; ++j) sign *= swap_sign(vp_[u], gp_[x[j]]);
            sign *= swap_sign(vp_[u], gp_[z]);
            Column& col = slot_cols_[base * dv_ + u];
            for (std::size_t k = 0; k < dv_; ++k) {
              if (!m(k, u).is_zero()) col.emplace_back(k, coef(Rational(sign) * m(k, u)));
            }
            if (!col.empty()) slot_nonzero_[base] = true;
          }
        }
      }
    }
  }

  /// (delta f)(X_1, ..., X_{m+1}, z) with f of parity `fp`; words.size() == m + 1.
  [[nodiscard]] SymVec apply(const Eval& f, Parity fp, std::span<const std::size_t> words, std::size_t z) const {
    const std::size_t m1 = words.size();
    if (m1 == 0) throw Error(ErrorCode::ArityMismatch, "coboundary needs at least one fundamental object");
    const std::size_t m = m1 - 1;
    SymVec out;
    std::vector<std::size_t> args;
    args.reserve(m1);
    auto without = [&](std::size_t i) {
      args.clear();
      for (std::size_t k = 0; k < m1; ++k) {
        if (k != i) args.push_back(words[k]);
      }
    };

    // X_i o X_j replaces X_j, X_i removed
    for (std::size_t i = 0; i < m1; ++i) {
      Parity between = Parity::even;
      for (std::size_t j = i + 1; j < m1; ++j) {
        const Column& comp = compose_[words[i] * nw_ + words[j]];
        if (!comp.empty()) {
          const int sign = ((i + 1) % 2 ? -1 : 1) * koszul(wp_[words[i]], between);
          without(i);
          for (const auto& [w, c] : comp) {
            args[j - 1] = w;
            add_scaled(out, Coef(sign) * c, f(args, z));
          }
        }
        between += wp_[words[j]];
      }
    }

    // f(.., X_i . z)
    for (std::size_t i = 0; i < m1; ++i) {
      const Column& act = action_[words[i] * dg_ + z];
      if (act.empty()) continue;
      Parity after = Parity::even;
      for (std::size_t k = i + 1; k < m1; ++k) after += wp_[words[k]];
      const int sign = ((i + 1) % 2 ? -1 : 1) * koszul(wp_[words[i]], after);
      without(i);
      for (const auto& [k, c] : act) add_scaled(out, Coef(sign) * c, f(args, k));
    }

    // X_i . f(.., z)
    Parity before = Parity::even;
    for (std::size_t i = 0; i < m1; ++i) {
      const std::size_t w = words[i];
      if (acts_[w]) {
        const int sign = ((i + 1) % 2 ? 1 : -1) * koszul(wp_[w], fp + before);
        without(i);
        add_mapped(out, Coef(sign), f(args, z), rho_cols_, w * dv_);
      }
      before += wp_[w];
    }

    // (-1)^m sum_i [X^1, .., f(X_1..X_m, X^i), .., X^{n-1}, z]
    const std::size_t last = words[m];
    const Word& x = rho_->words().word(last);
    Parity lead = fp;
    for (std::size_t k = 0; k < m; ++k) lead += wp_[words[k]];
    args.assign(words.begin(), words.begin() + static_cast<std::ptrdiff_t>(m));
    Parity prefix = Parity::even;
    const std::size_t slots = n_ - 1;
    for (std::size_t i = 0; i < slots; ++i) {
      const std::size_t base = (last * slots + i) * dg_ + z;
      if (slot_nonzero_[base]) {
        const int sign = (m % 2 ? -1 : 1) * koszul(lead, prefix);
        add_mapped(out, Coef(sign), f(args, x[i]), slot_cols_, base * dv_);
      }
      prefix += gp_[x[i]];
    }
    return out;
  }

 private:
  static Coef coef(const Rational& r) {
    auto c = convert_coef<Coef>(r);
    if (!c) throw Error(ErrorCode::DimensionMismatch, "constant not representable in the coefficient ring");
    return *c;
  }
  static Column convert(const SparseRow& row) {
    Column out;
    for (const auto& [k, v] : row) out.emplace_back(k, coef(v));
    return out;
  }
  static void add_scaled(SymVec& out, const Coef& c, const SymVec& s) {
    for (const auto& t : s) out.push_back({t.comp, t.key, c * t.coef});
  }
  // out += c * M s, with M given by its sparse columns starting at cols[offset + u]
  static void add_mapped(SymVec& out, const Coef& c, const SymVec& s, const std::vector<Column>& cols,
                         std::size_t offset) {
    for (const auto& t : s) {
      for (const auto& [k, m] : cols[offset + t.comp]) {
        out.push_back({static_cast<std::uint32_t>(k), t.key, c * m * t.coef});
      }
    }
  }

  const Representation* rho_;
  std::size_t dg_, dv_, nw_, n_;
  std::vector<Parity> gp_, vp_, wp_;
  std::vector<Column> action_;      // [w * dg + z]: X_w . e_z
  std::vector<Column> compose_;     // [a * nw + b]: X_a o X_b
  std::vector<Column> rho_cols_;    // [w * dv + u]: rho(X_w) e_u
  std::vector<bool> acts_;          // rho(X_w) != 0
  std::vector<Column> slot_cols_;   // [((w * (n-1) + i) * dg + z) * dv + u]
  std::vector<bool> slot_nonzero_;  // per (w, i, z)
};

using SymTerm = BasicSymTerm<Rational>;
using SymVec = BasicSymVec<Rational>;
using DeltaEngine = BasicDeltaEngine<Rational>;

}  // namespace nlsa
