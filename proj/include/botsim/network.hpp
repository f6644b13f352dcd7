#pragma once

// Degree model of a wireless D2D network: analytic Poisson degree profile
// for PPP deployments, empirical profiles from node-location data, and
// explicit geometric graphs for the agent-based simulator.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace botsim {

struct NetworkParams {
  double lambda = 300.0;  // device intensity, devices/km^2
  double r = 0.1;         // communication range, km
  double rho = 0.95;      // transmission success probability
  double p = 0.7;         // vulnerable fraction of devices

  // E[K] = lambda * pi * r^2 for a range-r geometric graph on a PPP.
  double mean_degree() const;
  void validate() const;  // throws ConfigError
};

// Truncated degree distribution. pi[k] = P[K = k] for k = 0..k_max,
// epsilon_tail = P[K > k_max]. For empirical distributions the tail is 0.
struct DegreeDistribution {
  std::vector<double> pi;    // size k_max + 1, indexed by degree
  int k_max = 0;
  double mean_degree = 0.0;  // E[K] of the untruncated law
  double epsilon_tail = 0.0;

  // sum_k k * pi[k] over the truncated support; normalizer for the link
  // probabilities so that an all-ones population maps exactly to 1.
  double size_biased_norm() const;
};

enum class BoundaryMode { torus, hard };

struct Region {
  double width = 1.0;   // km
  double height = 1.0;  // km
  double area() const { return width * height; }
};

struct SpatialGraph {
  std::vector<std::array<double, 2>> positions;  // km
  std::vector<std::vector<std::int32_t>> adjacency;
  Region region;
  BoundaryMode boundary = BoundaryMode::hard;

  std::size_t node_count() const { return positions.size(); }
  int degree(std::size_t i) const { return static_cast<int>(adjacency[i].size()); }
  std::size_t edge_count() const;
};

// Pairwise distance under the graph's boundary metric.
double pair_distance(const Region& region, BoundaryMode boundary,
                     const std::array<double, 2>& a, const std::array<double, 2>& b);

// Poisson degree model with mean lambda*pi*r^2, truncated at the smallest
// k_max whose exact tail mass P[K > k_max] is <= epsilon.
DegreeDistribution poisson_degree_distribution(const NetworkParams& params, double epsilon);

// Samples node locations from a homogeneous PPP over the region and connects
// all pairs within range r. Deterministic given the seed.
SpatialGraph sample_ppp_graph(const NetworkParams& params, const Region& region,
                              std::uint64_t seed, BoundaryMode boundary);

// Reads a location CSV (header `x,y` in km or `lon,lat` in degrees; one node
// per line) and builds the range-r graph with a hard boundary. Lon/lat input
// is projected to local planar km about the centroid.
SpatialGraph ingest_locations(std::istream& csv, double r);
SpatialGraph ingest_locations_file(const std::string& path, double r);

DegreeDistribution empirical_degree_distribution(const SpatialGraph& graph);

}  // namespace botsim
