#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "coauth/error.hpp"
#include "coauth/scaling.hpp"

namespace coauth {
namespace {

std::vector<double> synthetic(std::size_t n, double amp, double exponent, double cutoff) {
  std::vector<double> v;
  for (std::size_t r = 1; r <= n; ++r) {
    const double rank = static_cast<double>(r);
    v.push_back(amp * std::pow(rank, -exponent) *
                (std::isinf(cutoff) ? 1.0 : std::exp(-rank / cutoff)));
  }
  return v;
}

TEST(RankFit, PurePowerLaw) {
  const auto v = synthetic(1000, 100.0, 1.5, INFINITY);
  const auto fit = rank_fit(v);
  EXPECT_NEAR(fit.exponent, 1.5, 0.01);
  EXPECT_GT(fit.r_squared_head, 0.999);
  EXPECT_EQ(fit.head_cut, 500u);
  EXPECT_TRUE(std::isinf(fit.cutoff_scale));
  for (std::size_t r = 1; r <= v.size(); r += 37)
    EXPECT_LT(std::abs(std::log(fit.model(static_cast<double>(r))) - std::log(v[r - 1])), 1e-2);
}

TEST(RankFit, HeadResidualsOnExactData) {
  const auto v = synthetic(400, 3.0, 0.8, INFINITY);
  const auto fit = rank_fit(v, 400);
  EXPECT_NEAR(fit.exponent, 0.8, 1e-9);
  EXPECT_NEAR(fit.r_squared_head, 1.0, 1e-12);
  for (std::size_t r = 1; r <= v.size(); ++r) {
    const double rank = static_cast<double>(r);
    const double head_model = std::log(3.0) - fit.exponent * std::log(rank);
    EXPECT_LT(std::abs(head_model - std::log(v[r - 1])), 1e-6);
  }
}

TEST(RankFit, RecoversCutoffWithHeadInsidePowerLawRegion) {
  const auto v = synthetic(1000, 100.0, 1.5, 300.0);
  const auto fit = rank_fit(v, 50);
  EXPECT_NEAR(fit.cutoff_scale, 313.93834, 1e-4);  // profile minimum, computed with scipy
  EXPECT_GT(fit.cutoff_scale, 300.0 / 1.25);
  EXPECT_LT(fit.cutoff_scale, 300.0 * 1.25);
}

TEST(RankFit, ConstantVector) {
  const std::vector<double> v(50, 4.2);
  const auto fit = rank_fit(v);
  EXPECT_NEAR(fit.exponent, 0.0, 1e-12);
  EXPECT_NEAR(fit.amplitude, 4.2, 1e-12);
  EXPECT_TRUE(std::isinf(fit.cutoff_scale));
}

TEST(RankFit, ZerosDroppedAndInsufficientData) {
  std::vector<double> v(9, 1.0);
  v.resize(100, 0.0);
  EXPECT_THROW(rank_fit(v), InsufficientDataError);
  v.push_back(2.0);
  const auto fit = rank_fit(v);
  EXPECT_EQ(fit.points, 10u);
  EXPECT_EQ(fit.head_cut, 10u);
  EXPECT_THROW(rank_fit(v, 1), ParameterError);
}

TEST(RankFit, ScaleEquivariance) {
  for (double cutoff : {300.0, 80.0, double(INFINITY)}) {
    const auto v = synthetic(800, 10.0, 1.2, cutoff);
    const auto base = rank_fit(v, 60);
    for (double s : {1e-5, 0.5, 3.0, 1e6}) {
      std::vector<double> w(v);
      for (double& x : w) x *= s;
      const auto f = rank_fit(w, 60);
      EXPECT_NEAR(f.exponent, base.exponent, 1e-9);
      if (std::isinf(base.cutoff_scale))
        EXPECT_TRUE(std::isinf(f.cutoff_scale));
      else
        EXPECT_NEAR(f.cutoff_scale / base.cutoff_scale, 1.0, 1e-9);
      EXPECT_NEAR(f.amplitude / (base.amplitude * s), 1.0, 1e-9);
    }
  }
}

TEST(RankFit, Reports) {
  const auto v = synthetic(20, 5.0, 1.0, INFINITY);
  const auto fit = rank_fit(v);
  const auto csv = rank_fit_csv(fit);
  EXPECT_EQ(csv.rfind("key,value\nhead_cut,20\nexponent,", 0), 0u);
  const auto plot = rank_plot_csv(v, fit);
  EXPECT_EQ(plot.rfind("rank,value,model_value\n1,5,", 0), 0u);
}

}  // namespace
}  // namespace coauth
