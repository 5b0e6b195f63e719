#include <doctest.h>

#include "elastodisk/hankel.hpp"

using namespace elastodisk;

namespace {

// Reference values from a 40-digit arbitrary-precision evaluation.
struct Ref {
  double z;
  double h0r, h0i, h1r, h1i;
};
const Ref kRealAxis[] = {
    {1e-8, 0.999999999999999975, -11.8007738771795308, 4.99999999999999994e-9, -63661977.2367581949},
    {1e-4, 0.999999997500000002, -5.93728906970933702, 0.0000499999999375, -6366.19803645576163},
    {0.01, 0.999975000156249566, -3.00545563708364596, 0.00499993750026041612, -63.6785962820606564},
    {0.1, 0.997501562066040032, -1.53423865135036684, 0.0499375260362419976, -6.45895109470202699},
    {0.5, 0.938469807240812904, -0.444518733506706557, 0.242268457674873886, -1.47147239267024307},
    {1.0, 0.765197686557966551, 0.088256964215676958, 0.440050585744933516, -0.781212821300288717},
    {2.0, 0.223890779141235668, 0.51037567264974512, 0.576724807756873387, -0.107032431540937547},
    {5.0, -0.177596771314338304, -0.30851762524903378, -0.327579137591465222, 0.147863143391226845},
    {8.0, 0.171650807137553906, 0.223521489387566221, 0.234636346853914624, -0.158060461731247494},
    {12.0, 0.0476893107968335366, -0.225237312634361434, -0.223447104490627612, -0.0570992182608965211},
    {20.0, 0.167024664340583155, 0.0626405968093838312, 0.0668331241758500456, -0.165511614362521296},
    {24.9, 0.0832459683530156817, -0.136499183996765113, -0.134855699531408743, -0.0860025575955544415},
    {25.1, 0.108275671499949289, -0.116767707638037104, -0.114634784134422728, -0.110622233227830828},
    {30.0, -0.0863679835810402113, -0.117295731686664025, -0.118751062616622937, 0.0844255706617472349},
    {50.0, 0.055812327669251815, -0.098064995470077079, -0.0975118281251751377, -0.0567956685620147679},
};

struct CRef {
  double zr, zi;
  double h0r, h0i, h1r, h1i;
};
const CRef kComplex[] = {
    {1.0, 0.5, 0.430644626406534438, -0.0371569363242627937, 0.0998667806403214396, -0.536221365010795702},
    {10.0, 1.0, -0.0890191021592292094, 0.0248485140404834946, 0.0206248916377199221, 0.0907845671727944197},
    {30.0, 2.0, -0.0121931133789519509, -0.0154554190337943329, -0.0156766578929812298, 0.0119521601656415081},
    {0.3, -0.2, 1.39738064728997047, -0.664946467019847333, 1.08652460296320503, -1.75966640709687439},
    {40.0, -3.0, 0.0531157402527488892, 2.53030740434609724, 2.52880453847426302, -0.0215938997705297728},
};

}  // namespace

TEST_CASE("H0, H1 on the real axis to 1e-13 relative") {
  for (const auto& r : kRealAxis) {
    Complex h0 = hankel_h0(Complex(r.z, 0.0));
    Complex h1 = hankel_h1(Complex(r.z, 0.0));
    Complex e0 = Complex(r.h0r, r.h0i), e1 = Complex(r.h1r, r.h1i);
    CHECK(std::abs(h0 - e0) / std::abs(e0) < 1e-13);
    CHECK(std::abs(h1 - e1) / std::abs(e1) < 1e-13);
  }
}

TEST_CASE("H0, H1 at complex arguments") {
  for (const auto& r : kComplex) {
    Complex z(r.zr, r.zi);
    Complex h0 = hankel_h0(z), h1 = hankel_h1(z);
    CHECK(std::abs(h0 - Complex(r.h0r, r.h0i)) / std::abs(Complex(r.h0r, r.h0i)) < 1e-12);
    CHECK(std::abs(h1 - Complex(r.h1r, r.h1i)) / std::abs(Complex(r.h1r, r.h1i)) < 1e-12);
  }
}

TEST_CASE("small-argument limit of H0") {
  // H0(z) - (2i/pi) ln z -> 1 + (2i/pi)(gamma - ln 2) as z -> 0 along the reals
  const Complex lim(1.0, (2.0 / M_PI) * (kEulerGamma - std::log(2.0)));
  for (double z : {1e-6, 1e-8}) {
    Complex v = hankel_h0(Complex(z, 0.0)) - (2.0 * Complex(0, 1) / M_PI) * std::log(Complex(z, 0.0));
    CHECK(std::abs(v - lim) < 1e-11);
  }
}

TEST_CASE("large-argument magnitude ~ sqrt(2/(pi z))") {
  for (double z : {20.0, 35.0, 50.0}) {
    double mag = std::abs(hankel_h0(Complex(z, 0.0)));
    CHECK(mag == doctest::Approx(std::sqrt(2.0 / (M_PI * z))).epsilon(0.02));
  }
}

TEST_CASE("Wronskian J1(z) Y0(z)-ish identity: H0' = -H1") {
  // finite-difference check of the derivative identity used throughout the kernels
  const double h = 1e-6;
  for (double z : {0.7, 3.0, 14.0}) {
    Complex d = (hankel_h0(Complex(z + h, 0)) - hankel_h0(Complex(z - h, 0))) / (2.0 * h);
    CHECK(std::abs(d + hankel_h1(Complex(z, 0))) < 1e-8);
  }
}

TEST_CASE("zero argument rejected") { CHECK_THROWS_AS(hankel0_first_kind(Complex(0, 0)), std::domain_error); }
