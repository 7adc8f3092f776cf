// Copyright 2026 The qaa-maxcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qaa/graph.hpp"
#include "qaa/noise.hpp"
#include "qaa/spectral_flow.hpp"
#include "qaa/statevector.hpp"

namespace qaa::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kInternalError = 1,
    kInputError = 2,
    kBudgetError = 3,
    kNumericalError = 4,
};

/// Runs one command line (args[0] is the program name). Primary output goes
/// to `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// {"max_cut":C,"degeneracy":D,"solutions":[MSB-first bit strings]}
std::string brute_report_json(const MaxCutSolution& sol);

struct HistogramReport {
    const Histogram& histogram;
    TrotterSchedule schedule;
    std::string noise_name;
    NoiseModel noise;
    std::uint64_t seed = 0;
    std::size_t top = 8;
    const MaxCutSolution* solutions = nullptr;
};
std::string histogram_json(const HistogramReport& report);

/// Header `s,k,phase,re_scaled,im_scaled`, one row per eigenphase per sample.
std::string flow_csv(const SpectralFlow& flow);

/// Header `branch_id,s,phase`, one row per branch per sample.
std::string branches_csv(const SpectralFlow& flow);

std::string index_report_json(const IndexReport& report);

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double x);

}  // namespace qaa::cli
