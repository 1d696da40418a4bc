#pragma once

#include <cstdint>
#include <vector>

#include "shnn/hamiltonians.hpp"
#include "shnn/linsolve.hpp"

namespace shnn {

/// Relative L2 error sqrt(sum (truth - pred)^2 / sum truth^2).
double rel_l2(const Vec& pred, const Vec& truth);

/// Multi-seed aggregate for one experiment cell.
struct RunStats {
    std::vector<std::uint64_t> seeds;
    std::vector<double> errors;       ///< per seed, same order as seeds
    std::vector<double> times_s;      ///< per seed train time
    std::vector<double> residuals;
    double mean_error = 0.0;
    double min_error = 0.0;
    double max_error = 0.0;
    double mean_time_s = 0.0;
};

struct RunSetup {
    DomainBox box;              ///< empty -> system default domain
    Eigen::Index n_train = 10000;
    Eigen::Index n_test = 10000;
};

/// For each seed: fresh train/test draw from the data stream, train, evaluate
/// rel_l2 on the held-out test set. Seeds run independently (optionally in
/// parallel); aggregation is sorted by seed so results are order-insensitive.
RunStats run_stats(const SystemSpec& system, const RunSetup& setup, FitConfig config,
                   const std::vector<std::uint64_t>& seeds, std::size_t workers = 1);

}  // namespace shnn
