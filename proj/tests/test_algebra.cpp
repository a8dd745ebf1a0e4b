#include <gtest/gtest.h>

#include "alglength/algebra.hpp"
#include "alglength/echelon.hpp"
#include "alglength/families.hpp"
#include "support/random_algebra.hpp"

using namespace alglength;

namespace {

const auto Q = FieldDescriptor::rational();

Vector basis(const StructureTable &a, std::size_t i) { return a.basis_vector(i); }

} // namespace

TEST(Multiply, Power2SquaresChain) {
  const auto ex = make_example({Family::power2, 4});
  EXPECT_EQ(multiply(ex.table, basis(ex.table, 1), basis(ex.table, 1)), basis(ex.table, 2));
  EXPECT_EQ(multiply(ex.table, basis(ex.table, 2), basis(ex.table, 2)), basis(ex.table, 3));
  EXPECT_TRUE(is_zero(multiply(ex.table, basis(ex.table, 3), basis(ex.table, 3))));
  EXPECT_TRUE(is_zero(multiply(ex.table, basis(ex.table, 1), basis(ex.table, 2))));
}

TEST(Multiply, UnitIsNeutral) {
  const auto ex = make_example({Family::power2, 4});
  EXPECT_EQ(multiply(ex.table, ex.table.unit(), basis(ex.table, 3)), basis(ex.table, 3));
}

TEST(Multiply, FibLcAnticommutes) {
  const auto ex = make_example({Family::fib_lc, 5});
  EXPECT_EQ(multiply(ex.table, basis(ex.table, 1), basis(ex.table, 2)), basis(ex.table, 3));
  EXPECT_EQ(multiply(ex.table, basis(ex.table, 2), basis(ex.table, 1)),
            scaled(basis(ex.table, 3), Scalar::from_integer(Q, -1)));
}

TEST(Multiply, ShapeAndFieldErrors) {
  const auto ex = make_example({Family::power2, 4});
  EXPECT_THROW(multiply(ex.table, zero_vector(Q, 3), zero_vector(Q, 4)), ShapeError);
  EXPECT_THROW(multiply(ex.table, zero_vector(FieldDescriptor::prime(3), 4), zero_vector(Q, 4)),
               FieldMismatch);
}

TEST(ValidateUnital, Cases) {
  for (Family f : {Family::power2, Family::stall_chain, Family::fib_lc, Family::lc_gap7,
                   Family::lc_gap_family})
    EXPECT_TRUE(validate_unital(make_example({f, 4}).table)) << to_string(f);

  auto broken = StructureTable::with_default_names(Q, 3);
  broken.set_coefficient(0, 1, 1, Scalar::zero(Q));
  EXPECT_FALSE(validate_unital(broken));

  EXPECT_TRUE(validate_unital(StructureTable::with_default_names(Q, 1)));
}

TEST(CheckLcBasis, Cases) {
  for (std::size_t n = 3; n <= 8; ++n)
    EXPECT_TRUE(check_lc_basis(make_example({Family::fib_lc, n}).table)) << n;
  EXPECT_FALSE(check_lc_basis(make_example({Family::power2, 4}).table));

  auto complex = StructureTable::with_default_names(Q, 2);
  complex.set_coefficient(1, 1, 0, Scalar::from_integer(Q, -1));
  complex.set_coefficient(1, 1, 1, Scalar::zero(Q));
  EXPECT_TRUE(check_lc_basis(complex));
}

TEST(CheckLcBasis, RejectsSymmetricProducts) {
  auto a = StructureTable::with_default_names(Q, 4);
  for (std::size_t i = 1; i < 4; ++i)
    a.set_coefficient(i, i, 0, Scalar::from_integer(Q, -1));
  a.set_coefficient(1, 2, 3, Scalar::one(Q));
  a.set_coefficient(2, 1, 3, Scalar::one(Q));
  EXPECT_FALSE(check_lc_basis(a));
}

TEST(CheckLcBasis, PrimeFieldNotAllowed) {
  const auto ex = make_example({Family::fib_lc, 4}, FieldDescriptor::prime(3));
  EXPECT_THROW(check_lc_basis(ex.table), PrimeFieldNotAllowed);
}

TEST(AlgebraProperties, Bilinearity) {
  testkit::Rng rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const FieldDescriptor f = trial % 2 ? Q : FieldDescriptor::prime(5);
    const std::size_t n = testkit::uniform(rng, 1, 5);
    const auto a = testkit::random_algebra(rng, f, n, 0.5);
    const Vector u = testkit::random_vector(rng, f, n);
    const Vector w = testkit::random_vector(rng, f, n);
    const Vector v = testkit::random_vector(rng, f, n);
    const Scalar alpha = testkit::random_scalar(rng, f);
    const Scalar beta = testkit::random_scalar(rng, f);

    Vector mix = scaled(u, alpha);
    add_scaled(mix, beta, w);
    Vector expect_left = scaled(multiply(a, u, v), alpha);
    add_scaled(expect_left, beta, multiply(a, w, v));
    EXPECT_EQ(multiply(a, mix, v), expect_left);

    Vector expect_right = scaled(multiply(a, v, u), alpha);
    add_scaled(expect_right, beta, multiply(a, v, w));
    EXPECT_EQ(multiply(a, v, mix), expect_right);

    EXPECT_EQ(multiply(a, a.unit(), v), v);
    EXPECT_EQ(multiply(a, v, a.unit()), v);
  }
}

TEST(AlgebraProperties, LcBasisMakesPureElementsQuadratic) {
  testkit::Rng rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = testkit::uniform(rng, 2, 7);
    const auto a = testkit::random_lc_algebra(rng, n, 0.4);
    ASSERT_TRUE(check_lc_basis(a));
    Vector x = testkit::random_vector(rng, Q, n);
    x[0] = Scalar::zero(Q);
    EchelonSubspace span(Q, n);
    span.insert(a.unit());
    span.insert(x);
    EXPECT_TRUE(span.contains(multiply(a, x, x)));
  }
}
