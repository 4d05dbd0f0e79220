#include "nlsa/rational.hpp"

#include <cctype>

#include "nlsa/error.hpp"

namespace nlsa {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotAbelianIdeal: return "NotAbelianIdeal";
    case ErrorCode::NotASection: return "NotASection";
    case ErrorCode::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::WrongParity: return "WrongParity";
    case ErrorCode::NotWedgeCompatible: return "NotWedgeCompatible";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::EvenDimension: return "EvenDimension";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::NotIsotropic: return "NotIsotropic";
    case ErrorCode::NotIsotropicIdeal: return "NotIsotropicIdeal";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NonSquareScalar: return "NonSquareScalar";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::AxiomFailure: return "AxiomFailure";
  }
  return "Error";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw Error(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class p(n, 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  mpq_class v(p, q);
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

bool Rational::is_integer() const { return v_.get_den() == 1; }

std::optional<Rational> Rational::sqrt() const {
  if (sign() < 0) return std::nullopt;
  if (!mpz_perfect_square_p(v_.get_num_mpz_t()) || !mpz_perfect_square_p(v_.get_den_mpz_t())) {
    return std::nullopt;
  }
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), v_.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), v_.get_den_mpz_t());
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

}  // namespace nlsa
