#pragma once

// Values frozen from tests/oracle/gen_fixtures.py, an independent Python
// implementation of the generators and an exhaustive numpy search.

#include <array>

#include "maxdist/geometry.hpp"
#include "maxdist/report.hpp"

namespace maxdist::fixtures {

inline constexpr std::array<Point2, 8> kUniformSeed1{{
    {0x1.22145bd91204bp-1, 0x1.7dd71b42cb1ddp-1},
    {0x1.f12745ddf664ap-1, 0x1.c7061a43b90b2p-2},
    {0x1.c6ed53634406cp-2, 0x1.869a17ff202a0p-1},
    {0x1.c133d8d9ae6c7p-1, 0x1.0bcf761e244f0p-1},
    {0x1.245c6378d5f8ep-2, 0x1.9686b91ce8c2cp-1},
    {0x1.9dd771dc05592p-2, 0x1.35f9a89a299f1p-1},
    {0x1.d1db3e292ea96p-2, 0x1.0f6683ad21af4p-1},
    {0x1.be6db6b9bd314p-2, 0x1.561670bd2bca4p-3},
}};

inline constexpr std::array<Point2, 8> kUniformSeed42{{
    {0x1.7bae644c5fd6dp-1, 0x1.477f199d93378p-3},
    {0x1.1d499d5c4c3e6p-2, 0x1.607387fc392b8p-2},
    {0x1.378b0b4489040p-5, 0x1.bc8863f47901bp-1},
    {0x1.bf4b38e229bb4p-3, 0x1.99ec6bdd3d3c5p-1},
    {0x1.5c16e1dc2cf5ep-2, 0x1.3ca9ae7052feep-1},
    {0x1.a3a39253bad8cp-3, 0x1.f8d2283914594p-2},
    {0x1.06dbdb12fe7c8p-1, 0x1.0a3f2ee68fdadp-1},
    {0x1.548fc63805cf1p-1, 0x1.a0a2962a6be18p-3},
}};

inline constexpr std::array<Point2, 8> kGaussianSeed9{{
    {0x1.b15adc1d12bb4p-8, -0x1.83b4e5c17713dp+0},
    {0x1.5cfcb4556788ap-3, -0x1.887a29589a784p-1},
    {0x1.2c6465d3c476cp-1, 0x1.0785006a2687dp-1},
    {0x1.6edeb823509bep+0, -0x1.30770f4957441p-3},
    {0x1.5ec782280f669p-3, -0x1.5d2e3a92b4f0dp-1},
    {0x1.2c1c0aee1791dp-2, 0x1.4d648151fe2ddp+0},
    {0x1.6afc93070336dp-3, 0x1.7489f7f1f78fep+1},
    {0x1.45e3184737d0fp+0, -0x1.1c616642a65c8p+0},
}};

inline constexpr std::array<Point2, 8> kClusteredSeed5{{
    {0x1.0421bd043d8c4p+0, 0x1.1d74caa3b1966p-1},
    {0x1.a543b7a8c6d16p-2, 0x1.802fab97ec6afp-1},
    {0x1.c64009bbdbec4p-2, 0x1.ac9adef1c051ep-1},
    {0x1.11f05b0e3f739p+0, 0x1.2f608cb877984p-1},
    {0x1.e2032d440febdp-1, 0x1.08d42290fe4c4p+0},
    {0x1.600150ba22b31p-2, 0x1.ca22a95257342p-3},
    {0x1.ccc56895a64a1p-1, 0x1.fd96d755b1f9fp-1},
    {0x1.f5e620814e1e4p-1, 0x1.e0e4c8227c694p-1},
}};

struct DiameterFixture {
  double sq_dist;
  IndexPair witness;  // first pair in nested-loop order
};

inline constexpr DiameterFixture kUniform1000Seed42{0x1.d37aabc871645p+0, {314, 510}};
inline constexpr DiameterFixture kGaussian1000Seed9{0x1.ef0e15f7d6bacp+5, {294, 661}};
inline constexpr DiameterFixture kClustered1000Seed5{0x1.e3fbebcef59eep+0, {24, 753}};
inline constexpr DiameterFixture kCircle4096{0x1.0000000000001p+2, {18, 2066}};
inline constexpr DiameterFixture kUniform100Seed7{0x1.97f6a0a165ad2p+0, {42, 49}};

}  // namespace maxdist::fixtures
