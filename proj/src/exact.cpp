#include "mtrees/exact.hpp"

#include <algorithm>
#include <cctype>

namespace mtrees {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::oracle_bound_exceeded: return "oracle bound exceeded";
    case Errc::oracle_mismatch: return "oracle mismatch";
    case Errc::zero_constant_term: return "zero constant term";
    case Errc::nonzero_inner_constant: return "nonzero inner constant";
    case Errc::nonzero_constant: return "nonzero constant";
    case Errc::zero_linear_term: return "zero linear term";
    case Errc::empty_series: return "empty series";
    case Errc::invalid_order: return "invalid order";
    case Errc::empty_arguments: return "empty arguments";
    case Errc::zero_leaf_weight: return "zero leaf weight";
    case Errc::non_integer_result: return "non-integer result";
    case Errc::invalid_parameter: return "invalid parameter";
    case Errc::parse_error: return "parse error";
  }
  return "unknown error";
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

ExactInt parse_int(std::string_view text) {
  if (!is_integer_literal(text, true)) {
    throw Error(Errc::parse_error, "not an integer literal: '" + std::string(text) + "'");
  }
  return ExactInt(strip_plus(text), 10);
}

ExactRatio parse_ratio(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRatio(parse_int(text));

  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw Error(Errc::parse_error, "not a rational literal: '" + std::string(text) + "'");
  }
  ExactInt q(std::string(den), 10);
  if (q == 0) throw Error(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
  ExactRatio r(ExactInt(strip_plus(num), 10), q);
  r.canonicalize();
  return r;
}

std::string to_string(const ExactRatio& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const ExactInt& value) { return value.get_str(); }

ExactInt factorial(unsigned n) {
  ExactInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

ExactInt falling_factorial(const ExactInt& x, unsigned k) {
  ExactInt r = 1;
  for (unsigned i = 0; i < k; ++i) r *= x - i;
  return r;
}

ExactRatio pow(const ExactRatio& base, unsigned exponent) {
  ExactRatio r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  r.canonicalize();
  return r;
}

ExactInt to_integer(const ExactRatio& value) {
  if (value.get_den() != 1) {
    throw Error(Errc::non_integer_result, "expected an integer, got " + to_string(value));
  }
  return value.get_num();
}

BinomialTable::BinomialTable(unsigned n_max) : n_max_(n_max), rows_(n_max + 1) {
  for (unsigned n = 0; n <= n_max; ++n) {
    rows_[n].resize(n + 1);
    rows_[n][0] = rows_[n][n] = 1;
    for (unsigned k = 1; k < n; ++k) rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
  }
}

const ExactInt& BinomialTable::operator()(unsigned n, unsigned k) const {
  if (n > n_max_) throw Error(Errc::invalid_parameter, "binomial row beyond table");
  if (k > n) return zero_;
  return rows_[n][k];
}

}  // namespace mtrees
