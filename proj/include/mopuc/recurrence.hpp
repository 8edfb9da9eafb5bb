#pragma once

#include <cstdint>
#include <utility>

#include "mopuc/opuc.hpp"

namespace mopuc {

// Free coefficient data for the synthesis direction: h[k] holds H_{k+1}.
struct ReflectionSequence {
  int p = 0;
  std::vector<CMat> h;
};

// Dimensions consistent, entries finite, every |H|_2 <= 1 - 1e-8;
// ReflectionTooLarge past that bound.
void validate(const ReflectionSequence& seq);

// One Szego step: degree-n orthonormal pair plus H_{n+1} to the
// degree-(n+1) pair.
std::pair<MatPoly, MatPoly> szego_step(const MatPoly& phi_left, const MatPoly& phi_right,
                                       const CMat& h_next);

// Synthesis from free coefficients. phi_0 must be HPD; the default identity
// corresponds to total mass I. The result is recurrence-normalized and any
// valid sequence is realized: no measure is consulted.
OpucSystem favard_synthesize(const ReflectionSequence& seq);
OpucSystem favard_synthesize(const ReflectionSequence& seq, const CMat& phi0);

// Measure with density ( phi_n^L(z)^* phi_n^L(z) )^{-1} dtheta / 2pi and no
// atoms. Reproduces the system's polynomials up to degree n and kills every
// reflection coefficient past n.
MatMeasure bernstein_szego_measure(const OpucSystem& sys, int n,
                                   int quad_points = kDefaultQuadPoints);

// Synthesize, take the Bernstein-Szego measure of the top pair, rebuild from
// its moments, and return the worst singular-value discrepancy between input
// and recovered reflection coefficients.
double roundtrip_discrepancy(const ReflectionSequence& seq,
                             int quad_points = kDefaultQuadPoints);

// Deterministic pseudo-random sequence for fixtures: an mt19937_64 stream
// with an explicit 53-bit mapping (no library distributions), so the bits
// are identical on every platform. Each coefficient gets a spectral norm in
// [0.2, 1) * max_norm; requires max_norm <= 1 - 1e-8.
ReflectionSequence random_reflection_sequence(int p, int count, std::uint64_t seed,
                                              double max_norm);

}  // namespace mopuc
