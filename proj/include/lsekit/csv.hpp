#pragma once

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lsekit/dataset.hpp"
#include "lsekit/rls.hpp"

namespace lsekit {

/// Decimal rendering with 17 significant digits, enough to round-trip any
/// 64-bit value exactly.
std::string format_double(double value);

// Samples file: header "phi_0,...,phi_{n-1},y", one sample per line.
void write_samples_csv(std::ostream& out, const Dataset& ds);
void write_samples_csv(const std::filesystem::path& path, const Dataset& ds);
Dataset read_samples_csv(const std::filesystem::path& path);

// Ground-truth file: header "step,theta_0,...,theta_{n-1}".
void write_truth_csv(std::ostream& out, const std::vector<Vector>& truth);
void write_truth_csv(const std::filesystem::path& path,
                     const std::vector<Vector>& truth);
std::vector<Vector> read_truth_csv(const std::filesystem::path& path);

// Trace file: header "step,prediction,innovation,theta_0,...,gain_trace",
// mirroring the estimator's per-step records.
void write_trace_header(std::ostream& out, Index dim);
void write_trace_record(std::ostream& out, const rls::StepRecord& record);
std::vector<rls::StepRecord> read_trace_csv(const std::filesystem::path& path);

/// Pull-based samples reader holding one row at a time, so consuming a file
/// of any length needs only the current sample. Malformed rows raise
/// ParseError with their line number.
class CsvSampleReader {
public:
    explicit CsvSampleReader(const std::filesystem::path& path);
    explicit CsvSampleReader(std::istream& in);

    Index dim() const { return dim_; }

    /// Next sample, or nullopt at end of file.
    std::optional<Sample> next();

private:
    void read_header();

    std::ifstream file_;
    std::istream* in_;
    Index dim_ = 0;
    long line_number_ = 0;
};

} // namespace lsekit
