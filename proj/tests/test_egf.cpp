#include <catch2/catch_amalgamated.hpp>

#include "mtrees/egf.hpp"
#include "oracles.hpp"

using namespace mtrees;

namespace {

EgfSeries series(std::initializer_list<int> values, std::size_t order) {
  std::vector<ExactRatio> v;
  for (int x : values) v.emplace_back(x);
  return EgfSeries(std::move(v)).resized(order);
}

EgfSeries ones(std::size_t order) {
  return EgfSeries(std::vector<ExactRatio>(order + 1, ExactRatio(1)));
}

EgfSeries exp_minus_one(std::size_t order) {
  std::vector<ExactRatio> v(order + 1, ExactRatio(1));
  v[0] = 0;
  return EgfSeries(std::move(v));
}

EgfSeries unit(std::size_t order) { return series({1}, order); }

EgfSeries random_series(oracle::RandomRationals& rng, bool invertible_composition) {
  const unsigned order = rng.uniform(1, 12);
  std::vector<ExactRatio> v;
  for (unsigned i = 0; i <= order; ++i) v.push_back(rng.next());
  if (invertible_composition) {
    v[0] = 0;
    v[1] = rng.next_nonzero();
  } else {
    v[0] = rng.next_nonzero();
  }
  return EgfSeries(std::move(v));
}

template <class F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::invalid_parameter;
}

}  // namespace

TEST_CASE("series construction and equality") {
  CHECK(error_of([] { EgfSeries(std::vector<ExactRatio>{}); }) == Errc::invalid_order);
  CHECK(EgfSeries::identity(3) == series({0, 1}, 3));
  CHECK(EgfSeries::zero(0).order() == 0);
  CHECK_FALSE(series({1, 2}, 2) == series({1, 2}, 3));
  CHECK(series({1, 2, 3}, 1) == series({1, 2}, 1));
}

TEST_CASE("reciprocal examples") {
  CHECK(egf_reciprocal_bell(series({1, -1}, 5)) == series({1, 1, 2, 6, 24, 120}, 5));
  CHECK(egf_reciprocal_bell(series({1, -1, 1, -1}, 8)) ==
        series({1, 1, 1, 1, 2, 10, 50, 210, 840}, 8));
  CHECK(egf_reciprocal_bell(series({2}, 4)) ==
        EgfSeries({ExactRatio(1, 2), 0, 0, 0, 0}));
  CHECK(egf_reciprocal_oracle(series({1}, 6)) == series({1}, 6));
  CHECK(egf_reciprocal_oracle(ones(5)) == series({1, -1, 1, -1, 1, -1}, 5));
  CHECK(egf_product(ones(5), series({1, -1, 1, -1, 1, -1}, 5)) == unit(5));
  CHECK(egf_reciprocal_bell(series({3}, 0)) == EgfSeries({ExactRatio(1, 3)}));
}

TEST_CASE("reciprocal rejects a zero constant term") {
  CHECK(error_of([] { egf_reciprocal_bell(series({0, 1}, 3)); }) == Errc::zero_constant_term);
  CHECK(error_of([] { egf_reciprocal_oracle(series({0, 1}, 3)); }) == Errc::zero_constant_term);
}

TEST_CASE("integrate and derivative are index shifts") {
  CHECK(egf_integrate(series({1}, 2)) == series({0, 1}, 3));
  CHECK(egf_integrate(series({3, 5, 7}, 2)) == series({0, 3, 5, 7}, 3));
  CHECK(egf_derivative(series({0, 1}, 2)) == series({1}, 1));
  CHECK(egf_derivative(ones(3)) == ones(2));
  CHECK(error_of([] { egf_derivative(series({4}, 0)); }) == Errc::empty_series);

  oracle::RandomRationals rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ExactRatio> v;
    for (int i = 0; i <= 6; ++i) v.push_back(rng.next());
    const EgfSeries x(v);
    CHECK(egf_derivative(egf_integrate(x)) == x);
    v[0] = 0;
    CHECK(egf_integrate(egf_derivative(x)) == EgfSeries(v));
  }
}

TEST_CASE("composition examples") {
  const EgfSeries z = series({0, 3, -2, 5, 1}, 4);
  CHECK(egf_compose(EgfSeries::identity(4), z) == z);
  CHECK(egf_compose(series({0, 1, -1}, 2), series({0, 1}, 2)) == series({0, 1, -1}, 2));
  CHECK(error_of([] { egf_compose(ones(3), ones(3)); }) == Errc::nonzero_inner_constant);
  CHECK(error_of([] { egf_compose_powers(ones(3), ones(3)); }) == Errc::nonzero_inner_constant);
  CHECK(egf_compose(ones(5), series({0, 1}, 3)).order() == 3);
}

TEST_CASE("e^t - 1 composed with itself counts set partitions") {
  // n! [t^n] e^{e^t - 1} - 1 is the Bell number; a second level of nesting
  // counts pairs (partition, partition of its blocks).
  const EgfSeries f = exp_minus_one(5);
  const EgfSeries twice = egf_compose(f, f);
  const EgfSeries thrice = egf_compose(f, twice);
  for (unsigned n = 1; n <= 5; ++n) {
    CHECK(twice[n] == ExactRatio(static_cast<unsigned long>(oracle::bell_number(n))));
    CHECK(thrice[n] == ExactRatio(static_cast<unsigned long>(oracle::two_level_partitions(n))));
  }
  CHECK(twice[3] == 5);
  CHECK(thrice[3] == 12);
}

TEST_CASE("Bell and power compositions agree") {
  oracle::RandomRationals rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const EgfSeries outer = random_series(rng, false);
    EgfSeries inner = random_series(rng, true);
    CHECK(egf_compose(outer, inner) == egf_compose_powers(outer, inner));
  }
}

TEST_CASE("compositional inverse examples") {
  CHECK(egf_comp_inverse_bell(EgfSeries::identity(5)) == EgfSeries::identity(5));
  CHECK(egf_comp_inverse_oracle(EgfSeries::identity(5)) == EgfSeries::identity(5));

  const EgfSeries log1p = egf_comp_inverse_bell(exp_minus_one(6));
  CHECK(log1p == series({0, 1, -1, 2, -6, 24, -120}, 6));
  CHECK(egf_compose(exp_minus_one(6), log1p) == EgfSeries::identity(6));

  CHECK(egf_comp_inverse_bell(series({0, 2}, 3)) == EgfSeries({0, ExactRatio(1, 2), 0, 0}));

  const EgfSeries quad = series({0, 1, 2}, 8);  // t + t^2
  const EgfSeries y = egf_comp_inverse_oracle(quad);
  CHECK(egf_compose(quad, y) == EgfSeries::identity(8));
  CHECK(y == egf_comp_inverse_bell(quad));
}

TEST_CASE("compositional inverse preconditions") {
  CHECK(error_of([] { egf_comp_inverse_bell(series({1, 1}, 3)); }) == Errc::nonzero_constant);
  CHECK(error_of([] { egf_comp_inverse_bell(series({0, 0, 1}, 3)); }) == Errc::zero_linear_term);
  CHECK(error_of([] { egf_comp_inverse_oracle(series({1, 1}, 3)); }) == Errc::nonzero_constant);
  CHECK(error_of([] { egf_comp_inverse_oracle(series({0, 0, 1}, 3)); }) == Errc::zero_linear_term);
  CHECK(error_of([] { egf_comp_inverse_bell(series({0}, 0)); }) == Errc::zero_linear_term);
}

TEST_CASE("reciprocal property on random series") {
  oracle::RandomRationals rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const EgfSeries x = random_series(rng, false);
    const EgfSeries r = egf_reciprocal_bell(x);
    CAPTURE(trial, to_text(x));
    CHECK(r.order() == x.order());
    CHECK(egf_product(x, r) == unit(x.order()));
    CHECK(r == egf_reciprocal_oracle(x));
  }
}

TEST_CASE("compositional inverse property on random series") {
  oracle::RandomRationals rng(4321);
  for (int trial = 0; trial < 200; ++trial) {
    const EgfSeries x = random_series(rng, true);
    const EgfSeries y = egf_comp_inverse_bell(x);
    CAPTURE(trial, to_text(x));
    CHECK(y.order() == x.order());
    CHECK(egf_compose(x, y) == EgfSeries::identity(x.order()));
    CHECK(egf_compose(y, x) == EgfSeries::identity(x.order()));
    CHECK(y == egf_comp_inverse_oracle(x));
  }
}

TEST_CASE("text form round-trips") {
  oracle::RandomRationals rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const EgfSeries x = random_series(rng, false);
    CHECK(series_from_text(to_text(x)) == x);
  }
  CHECK(to_text(EgfSeries({parse_ratio("-2/4"), 3})) == "order 1\n-1/2\n3\n");
  CHECK(error_of([] { series_from_text("order 2\n1\n2\n"); }) == Errc::parse_error);
  CHECK(error_of([] { series_from_text("ord 0\n1\n"); }) == Errc::parse_error);
}
