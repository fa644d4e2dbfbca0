#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "mcdd/diffusion.hpp"

using namespace mcdd;

namespace {

constexpr double kPi = 3.14159265358979323846;

SystemParams base() {
  return SystemParams{100.0, 10.0, 1e8,  1e-4, 1000.0, 0.5,
                      400,   2.0,  2.3,  0.01, 0.3,    0.2};
}

}  // namespace

TEST_CASE("transmission profile is Q on open pulse intervals") {
  const TransmissionProfile prof{1e8, 0.01};
  CHECK(transmission_profile(0.5 * prof.Ts, prof) == prof.Q);
  CHECK(transmission_profile(prof.Ts, prof) == 0.0);
  CHECK(transmission_profile(2.5 * prof.Ts, prof) == prof.Q);
  CHECK(transmission_profile(0.0, prof) == 0.0);
  CHECK_THROWS_AS(transmission_profile(-1.0, prof), std::domain_error);
}

TEST_CASE("erfc matches an independent oracle to 1e-12") {
  // std::erfc is the independent oracle; the production path uses its own
  // series/continued-fraction evaluation.
  for (double x = -6.0; x <= 6.0; x += 0.0625)
    CHECK(std::abs(mcdd::erfc(x) - std::erfc(x)) <= 1e-12);
  CHECK(mcdd::erfc(0.0) == 1.0);
  CHECK(std::abs(mcdd::erfc(1.0) - 0.15729920705028513) <= 1e-12);
  CHECK(mcdd::erfc(40.0) == 0.0);
  CHECK(mcdd::erfc(-40.0) == 2.0);
}

TEST_CASE("impulse response spot value and small-t tail") {
  SystemParams p = base();
  p.Q = 1.0;
  // h(0.25, 10) = 1/(4*pi*100*0.25)^{3/2} * e^{-1}
  const double expected =
      std::exp(-1.0) / std::pow(4.0 * kPi * 100.0 * 0.25, 1.5);
  CHECK(impulse_response(0.25, 10.0, p) ==
        doctest::Approx(expected).epsilon(1e-14));
  CHECK(impulse_response(1e-6, 10.0, p) < 1e-300);
  CHECK_THROWS_AS(impulse_response(0.0, 10.0, p), std::domain_error);
  CHECK_THROWS_AS(impulse_response(-1.0, 10.0, p), std::domain_error);
}

TEST_CASE("impulse response integrates to Q over all space") {
  const SystemParams p = base();
  for (double t : {0.01, 0.25, 2.0}) {
    // Simpson quadrature of h * 4 pi r^2 out to 12 diffusion lengths.
    const double rmax = 12.0 * std::sqrt(4.0 * p.D * t);
    const int n = 4000;  // even
    const double hstep = rmax / n;
    double sum = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double r = i * hstep;
      const double fr = impulse_response(t, r, p) * 4.0 * kPi * r * r;
      sum += fr * ((i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2));
    }
    sum *= hstep / 3.0;
    CHECK(sum == doctest::Approx(p.Q).epsilon(1e-6));
  }
}

TEST_CASE("concentration limits and spot value") {
  const SystemParams p = base();
  const double steady = p.Q / (4.0 * kPi * p.D * 10.0 * p.dt);
  // erfc(1) factor at D=100, r=10, t=0.25
  CHECK(concentration(10.0, 0.25, p) ==
        doctest::Approx(0.15729920705028513 * steady).epsilon(1e-12));
  // t -> infinity approaches the steady value
  CHECK(concentration(10.0, 1e18, p) == doctest::Approx(steady).epsilon(1e-9));
  // r -> infinity vanishes
  CHECK(concentration(1e4, 0.25, p) == 0.0);
  CHECK_THROWS_AS(concentration(0.0, 1.0, p), std::domain_error);
  CHECK_THROWS_AS(concentration(1.0, 0.0, p), std::domain_error);
}

TEST_CASE("concentration is monotone nondecreasing in t") {
  const SystemParams p = base();
  double prev = 0.0;
  for (double t = 0.01; t < 10.0; t *= 1.5) {
    const double c = concentration(10.0, t, p);
    CHECK(c >= prev);
    prev = c;
  }
}

TEST_CASE("concentration reaches steady state once erfc argument is small") {
  const SystemParams p = base();
  const double r = 10.0;
  const double t = 100.0 * r * r / (4.0 * p.D);  // erfc argument 0.1
  const double steady = p.Q / (4.0 * kPi * p.D * r * p.dt);
  // erfc(0.1) ~ 0.8875; full 1e-6 relative agreement needs arg ~ 1e-6
  CHECK(concentration(r, t, p) / steady > 0.88);
  CHECK(concentration(r, 1e12, p) == doctest::Approx(steady).epsilon(1e-6));
}

TEST_CASE("enter rate spot value and scaling") {
  const SystemParams p = base();
  CHECK(enter_rate(p) == doctest::Approx(7.957747154594767e7).epsilon(1e-12));
  SystemParams q2 = p;
  q2.Q *= 2;
  CHECK(enter_rate(q2) == doctest::Approx(2 * enter_rate(p)).epsilon(1e-15));
  SystemParams r2 = p;
  r2.R *= 2;
  CHECK(enter_rate(r2) == doctest::Approx(0.5 * enter_rate(p)).epsilon(1e-15));
}

TEST_CASE("enter rate is strictly monotone in R and Q") {
  const SystemParams p = base();
  double prev = enter_rate(p);
  for (double R = 11.0; R <= 20.0; R += 1.0) {
    SystemParams q = p;
    q.R = R;
    const double lam = enter_rate(q);
    CHECK(lam < prev);
    prev = lam;
  }
  prev = 0;
  for (double Q = 1e8; Q <= 9.1e9; Q *= 2) {
    SystemParams q = p;
    q.Q = Q;
    const double lam = enter_rate(q);
    CHECK(lam > prev);
    prev = lam;
  }
}
