#include "lsekit/dataset.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace lsekit {

void validate_sample(const Sample& sample, Index dim) {
    if (sample.regressor.size() != dim) {
        std::ostringstream os;
        os << "regressor dimension " << sample.regressor.size()
           << " does not match dataset dimension " << dim;
        throw ShapeError(os.str());
    }
    if (!sample.regressor.allFinite()) {
        throw DataError("regressor holds non-finite entries");
    }
    if (!std::isfinite(sample.output)) {
        throw DataError("sample output is non-finite");
    }
}

Dataset::Dataset(Index dim) : dim_(dim) {
    if (dim < 1) {
        throw ShapeError("dataset dimension must be positive");
    }
}

Dataset Dataset::from_samples(std::vector<Sample> samples) {
    if (samples.empty()) {
        throw EmptyInputError("cannot derive a dimension from zero samples");
    }
    Dataset ds(samples.front().regressor.size());
    for (auto& s : samples) {
        ds.append(std::move(s));
    }
    return ds;
}

void Dataset::append(Sample sample) {
    validate_sample(sample, dim_);
    samples_.push_back(std::move(sample));
}

void Dataset::append(const Vector& regressor, double output) {
    append(Sample{regressor, output});
}

} // namespace lsekit
