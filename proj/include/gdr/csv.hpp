#pragma once

#include "gdr/engine.hpp"
#include "gdr/experiment.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace gdr::csv {

inline constexpr const char* kSweepHeader = "algorithm,n,instance_id,theta,mean_iterations,tau,converged_fraction";
inline constexpr const char* kCompareHeader = "algorithm,n,instance_id,pierra_angle_rad,theta_used,mean_iterations";
inline constexpr const char* kAggregateHeader = "algorithm,n,mean_iterations";
inline constexpr const char* kBestThetaHeader = "algorithm,n,best_theta,median_iterations";
inline constexpr const char* kSpiralHeader = "k,v_x,v_y,x1_x,x1_y,x2_x,x2_y,dist_v,dist_x";

/// 17 significant digits, independent of the global locale.
std::string format_real(double value);

void write_sweep(std::ostream& out, const std::vector<SweepRecord>& records);
void write_compare(std::ostream& out, const std::vector<CompareRecord>& records);
void write_aggregate(std::ostream& out, const std::vector<AggregateRecord>& records);
void write_best_theta(std::ostream& out, const std::vector<BestTheta>& records);
void write_spiral(std::ostream& out, const SpiralDemo& demo);

/// Readers check the header exactly and throw InvalidInput on any malformed row.
std::vector<SweepRecord> read_sweep(std::istream& in);
std::vector<CompareRecord> read_compare(std::istream& in);
std::vector<BestTheta> read_best_theta(std::istream& in);

}  // namespace gdr::csv
