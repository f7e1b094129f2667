#include "mtrees/egf.hpp"

#include <sstream>
#include <utility>

#include "mtrees/bell.hpp"

namespace mtrees {

namespace {

void require_unit_constant(const EgfSeries& x) {
  if (x[0] == 0) throw Error(Errc::zero_constant_term, "reciprocal needs x_0 != 0");
}

void require_invertible(const EgfSeries& x) {
  if (x[0] != 0) throw Error(Errc::nonzero_constant, "compositional inverse needs x_0 = 0");
  if (x.order() < 1 || x[1] == 0) {
    throw Error(Errc::zero_linear_term, "compositional inverse needs x_1 != 0");
  }
}

unsigned as_unsigned(std::size_t n) { return static_cast<unsigned>(n); }

}  // namespace

EgfSeries::EgfSeries(std::vector<ExactRatio> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(Errc::invalid_order, "series needs at least one coefficient");
}

EgfSeries EgfSeries::zero(std::size_t order) {
  return EgfSeries(std::vector<ExactRatio>(order + 1, ExactRatio(0)));
}

EgfSeries EgfSeries::identity(std::size_t order) {
  std::vector<ExactRatio> c(order + 1, ExactRatio(0));
  if (order >= 1) c[1] = 1;
  return EgfSeries(std::move(c));
}

EgfSeries EgfSeries::resized(std::size_t order) const {
  std::vector<ExactRatio> c = coeffs_;
  c.resize(order + 1, ExactRatio(0));
  return EgfSeries(std::move(c));
}

EgfSeries egf_product(const EgfSeries& a, const EgfSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  const BinomialTable binom(as_unsigned(order));
  std::vector<ExactRatio> c(order + 1, ExactRatio(0));
  for (std::size_t n = 0; n <= order; ++n) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (a[j] == 0 || b[n - j] == 0) continue;
      c[n] += ExactRatio(binom(as_unsigned(n), as_unsigned(j))) * a[j] * b[n - j];
    }
  }
  return EgfSeries(std::move(c));
}

EgfSeries egf_reciprocal_bell(const EgfSeries& x) {
  require_unit_constant(x);
  const std::size_t order = x.order();

  std::vector<ExactRatio> args;
  for (std::size_t i = 1; i <= order; ++i) args.push_back(x[i]);
  if (args.empty()) args.emplace_back(0);
  const BellTable bell = bell_table(as_unsigned(order), ArgSeq(std::move(args)));

  const ExactRatio inv_x0 = 1 / x[0];
  const ExactRatio neg_inv_x0 = -inv_x0;

  // weight[k] = k! / (-x_0)^k
  std::vector<ExactRatio> weight(order + 1);
  weight[0] = 1;
  for (std::size_t k = 1; k <= order; ++k) weight[k] = weight[k - 1] * neg_inv_x0 * k;

  std::vector<ExactRatio> c(order + 1, ExactRatio(0));
  for (std::size_t n = 0; n <= order; ++n) {
    ExactRatio acc = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      acc += weight[k] * bell.at(as_unsigned(n), as_unsigned(k));
    }
    c[n] = inv_x0 * acc;
  }
  return EgfSeries(std::move(c));
}

EgfSeries egf_reciprocal_oracle(const EgfSeries& x) {
  require_unit_constant(x);
  const std::size_t order = x.order();
  const BinomialTable binom(as_unsigned(order));
  std::vector<ExactRatio> y(order + 1, ExactRatio(0));
  y[0] = 1 / x[0];
  for (std::size_t n = 1; n <= order; ++n) {
    ExactRatio acc = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      acc += ExactRatio(binom(as_unsigned(n), as_unsigned(j))) * x[j] * y[n - j];
    }
    y[n] = -acc / x[0];
  }
  return EgfSeries(std::move(y));
}

EgfSeries egf_integrate(const EgfSeries& x) {
  std::vector<ExactRatio> c;
  c.reserve(x.order() + 2);
  c.emplace_back(0);
  for (const auto& v : x.coeffs()) c.push_back(v);
  return EgfSeries(std::move(c));
}

EgfSeries egf_derivative(const EgfSeries& x) {
  if (x.order() == 0) throw Error(Errc::empty_series, "derivative of an order-0 series");
  const auto src = x.coeffs();
  return EgfSeries(std::vector<ExactRatio>(src.begin() + 1, src.end()));
}

EgfSeries egf_compose(const EgfSeries& outer, const EgfSeries& inner) {
  if (inner[0] != 0) throw Error(Errc::nonzero_inner_constant, "inner series needs zero constant");
  const std::size_t order = std::min(outer.order(), inner.order());

  std::vector<ExactRatio> args;
  for (std::size_t i = 1; i <= order; ++i) args.push_back(inner[i]);
  if (args.empty()) args.emplace_back(0);
  const BellTable bell = bell_table(as_unsigned(order), ArgSeq(std::move(args)));

  std::vector<ExactRatio> c(order + 1, ExactRatio(0));
  for (std::size_t n = 0; n <= order; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      if (outer[k] == 0) continue;
      c[n] += outer[k] * bell.at(as_unsigned(n), as_unsigned(k));
    }
  }
  return EgfSeries(std::move(c));
}

EgfSeries egf_compose_powers(const EgfSeries& outer, const EgfSeries& inner) {
  if (inner[0] != 0) throw Error(Errc::nonzero_inner_constant, "inner series needs zero constant");
  const std::size_t order = std::min(outer.order(), inner.order());
  const EgfSeries z = inner.resized(order);

  // Horner: outer_0 + z (outer_1 + z/2 (outer_2 + z/3 (...))). In the EGF basis
  // the ordinary-power coefficient of outer is outer_k / k!.
  EgfSeries acc = EgfSeries::zero(order);
  for (std::size_t k = order + 1; k-- > 0;) {
    std::vector<ExactRatio> c(acc.coeffs().begin(), acc.coeffs().end());
    if (k < order) {
      const EgfSeries prod = egf_product(acc, z);
      for (std::size_t n = 0; n <= order; ++n) c[n] = prod[n] / (k + 1);
    }
    c[0] += outer[k];
    acc = EgfSeries(std::move(c));
  }
  return acc;
}

EgfSeries egf_comp_inverse_bell(const EgfSeries& x) {
  require_invertible(x);
  const std::size_t order = x.order();

  // Leading zero stands in for x_1; B_{n+k-1,k} reads arguments up to x_n.
  std::vector<ExactRatio> args{ExactRatio(0)};
  for (std::size_t i = 2; i <= order; ++i) args.push_back(x[i]);
  const unsigned table_n = order >= 2 ? as_unsigned(2 * order - 2) : 0;
  const BellTable bell = bell_table(table_n, ArgSeq(std::move(args)));

  const ExactRatio inv_x1 = 1 / x[1];
  std::vector<ExactRatio> c(order + 1, ExactRatio(0));
  c[1] = inv_x1;
  for (std::size_t n = 2; n <= order; ++n) {
    ExactRatio acc = 0;
    for (std::size_t k = 1; k <= n - 1; ++k) {
      const ExactRatio& b = bell.at(as_unsigned(n + k - 1), as_unsigned(k));
      if (b == 0) continue;
      ExactRatio term = pow(inv_x1, as_unsigned(n + k)) * b;
      if (k % 2 == 1) term = -term;
      acc += term;
    }
    c[n] = std::move(acc);
  }
  return EgfSeries(std::move(c));
}

EgfSeries egf_comp_inverse_oracle(const EgfSeries& x) {
  require_invertible(x);
  const std::size_t order = x.order();
  std::vector<ExactRatio> y(order + 1, ExactRatio(0));
  y[1] = 1 / x[1];
  // With y_n still zero, [t^n/n!] x(y(t)) misses exactly x_1 y_n.
  for (std::size_t n = 2; n <= order; ++n) {
    const EgfSeries partial = egf_compose_powers(x.resized(n), EgfSeries(y).resized(n));
    y[n] = -partial[n] / x[1];
  }
  return EgfSeries(std::move(y));
}

std::string to_text(const EgfSeries& series) {
  std::string out = "order " + std::to_string(series.order()) + "\n";
  for (const auto& c : series.coeffs()) out += to_string(c) + "\n";
  return out;
}

EgfSeries series_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word;
  long long order = -1;
  if (!(in >> word) || word != "order" || !(in >> order) || order < 0) {
    throw Error(Errc::parse_error, "series text must start with 'order N'");
  }
  std::vector<ExactRatio> coeffs;
  std::string token;
  while (in >> token) coeffs.push_back(parse_ratio(token));
  if (coeffs.size() != static_cast<std::size_t>(order) + 1) {
    throw Error(Errc::parse_error, "expected " + std::to_string(order + 1) + " coefficients, got " +
                                       std::to_string(coeffs.size()));
  }
  return EgfSeries(std::move(coeffs));
}

}  // namespace mtrees
