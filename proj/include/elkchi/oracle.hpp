#pragma once

#include "elkchi/map_germ.hpp"

namespace elkchi {

// Configuration for the geometric degree oracles. Evaluation happens at
// exact rational points on a rational approximation of the sphere; the
// degree is invariant under positive radial scaling, so the points need not
// lie exactly on it.
struct OracleConfig {
    Rational radius = Rational(1, 4);
    int circle_resolution = 1024;   // initial sample count, n = 2
    int icosa_depth = 5;            // initial subdivision depth, n = 3
    int max_refinements = 4;
    unsigned target_seed = 0x5eed5u; // PL target direction; re-drawn when degenerate
};

// Total signed turning of H along a sampled circle divided by 2*pi, computed
// by exact ray-crossing counts; refined until two successive resolutions
// agree.
long winding_degree(const MapGerm& h, const OracleConfig& cfg = {});

// Signed count of PL preimages of a generic target direction over an
// icosahedral triangulation of the 2-sphere; stable under one refinement.
long pl_sphere_degree(const MapGerm& h, const OracleConfig& cfg = {});

// Single-depth PL count without the stability loop (diagnostics and tests).
long pl_sphere_degree_at_depth(const MapGerm& h, const OracleConfig& cfg, int depth);

// Dispatches on the number of variables (2 -> winding, 3 -> PL sphere).
long oracle_degree(const MapGerm& h, const OracleConfig& cfg = {});

} // namespace elkchi
