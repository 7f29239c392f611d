#pragma once

#include <vector>

#include "lsekit/matrix.hpp"

namespace lsekit {

/// One paired observation: the regressor phi(k-1) and the output y(k) it
/// produced. The time pairing is applied by the producer, so a Sample is
/// already aligned.
struct Sample {
    Vector regressor;
    double output = 0.0;
};

/// An ordered collection of samples sharing one regressor dimension.
class Dataset {
public:
    explicit Dataset(Index dim);
    static Dataset from_samples(std::vector<Sample> samples);

    /// Validates dimension and finiteness before admitting the sample.
    void append(Sample sample);
    void append(const Vector& regressor, double output);

    Index dim() const { return dim_; }
    Index size() const { return static_cast<Index>(samples_.size()); }
    bool empty() const { return samples_.empty(); }
    const Sample& operator[](Index i) const {
        return samples_[static_cast<std::size_t>(i)];
    }
    const std::vector<Sample>& samples() const { return samples_; }

private:
    Index dim_;
    std::vector<Sample> samples_;
};

/// Throws ShapeError/DataError unless the sample has dimension `dim` and
/// finite entries.
void validate_sample(const Sample& sample, Index dim);

} // namespace lsekit
