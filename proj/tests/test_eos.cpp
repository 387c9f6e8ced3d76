#include <gtest/gtest.h>

#include <cmath>

#include "fanlab/eos.hpp"
#include "fanlab/error.hpp"

using namespace fanlab;

TEST(Eos, PressureExamples) {
  EXPECT_DOUBLE_EQ(pressure(GasLaw(2.0), 1.0), 1.0);
  EXPECT_DOUBLE_EQ(pressure(GasLaw(2.0), 2.0), 4.0);
  EXPECT_DOUBLE_EQ(pressure(GasLaw(3.0), 0.5), 0.125);
}

TEST(Eos, InternalEnergyExamples) {
  EXPECT_DOUBLE_EQ(internal_energy(GasLaw(2.0), 3.0), 3.0);
  EXPECT_DOUBLE_EQ(internal_energy(GasLaw(2.0), 1.0), 1.0);
  EXPECT_DOUBLE_EQ(internal_energy(GasLaw(3.0), 2.0), 2.0);
}

TEST(Eos, EnergyAndLagrangianExamples) {
  const GasLaw law(2.0);
  EXPECT_DOUBLE_EQ(energy_density(law, 1.0, {0.0, 0.0}), 1.0);
  EXPECT_DOUBLE_EQ(energy_density(law, 1.0, {0.0, 2.0}), 3.0);
  EXPECT_DOUBLE_EQ(energy_density(law, 2.0, {1.0, 1.0}), 6.0);
  EXPECT_DOUBLE_EQ(lagrangian_density(law, 1.0, {0.0, 0.0}), -1.0);
  EXPECT_DOUBLE_EQ(lagrangian_density(law, 1.0, {0.0, 2.0}), 1.0);
  EXPECT_DOUBLE_EQ(lagrangian_density(law, 2.0, {0.0, 1.0}), -3.0);
}

TEST(Eos, RejectsNonPositiveDensity) {
  const GasLaw law(2.0);
  for (double rho : {0.0, -1.0}) {
    try {
      pressure(law, rho);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NonPositiveDensity);
    }
    EXPECT_THROW(internal_energy(law, rho), Error);
    EXPECT_THROW(energy_density(law, rho, {}), Error);
    EXPECT_THROW(lagrangian_density(law, rho, {}), Error);
  }
}

TEST(Eos, GammaRange) {
  EXPECT_THROW(GasLaw(1.0), Error);
  EXPECT_THROW(GasLaw(3.5), Error);
  EXPECT_THROW(GasLaw(0.9, true), Error);
  EXPECT_NO_THROW(GasLaw(3.0));
  const GasLaw iso(1.0, true);
  EXPECT_TRUE(iso.isothermal());
  EXPECT_DOUBLE_EQ(internal_energy(iso, std::exp(2.0)), 2.0);
  EXPECT_DOUBLE_EQ(pressure(iso, 3.0), 3.0);
}

TEST(Eos, PressureStrictlyIncreasing) {
  for (double gamma : {1.2, 1.4, 5.0 / 3.0, 2.0, 3.0}) {
    const GasLaw law(gamma);
    double previous = pressure(law, 1e-3);
    for (int k = 1; k <= 120; ++k) {
      const double p = pressure(law, 1e-3 * std::pow(10.0, k * 0.05));
      EXPECT_GT(p, previous);
      previous = p;
    }
  }
}

TEST(Eos, InternalEnergySolvesItsOde) {
  // eps'(rho) rho^2 = p(rho), checked with central differences.
  for (double gamma : {1.2, 1.4, 2.0, 2.5, 3.0}) {
    const GasLaw law(gamma);
    for (double rho = 0.1; rho < 10.0; rho *= 1.37) {
      const double h = 1e-5 * rho;
      const double de = (internal_energy(law, rho + h) - internal_energy(law, rho - h)) / (2 * h);
      EXPECT_NEAR(de * rho * rho / pressure(law, rho), 1.0, 1e-8) << gamma << " " << rho;
    }
  }
}

TEST(Eos, EnergyMinusLagrangian) {
  const GasLaw law(1.4);
  for (double rho : {0.3, 1.0, 2.7})
    for (Velocity v : {Velocity{0, 0}, Velocity{0.5, -1.5}, Velocity{3, 2}}) {
      const double diff = energy_density(law, rho, v) - lagrangian_density(law, rho, v);
      EXPECT_NEAR(diff, 2 * rho * internal_energy(law, rho), 1e-14 * (1 + std::abs(diff)));
    }
}
