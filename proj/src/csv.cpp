#include "lsekit/csv.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>
#include <system_error>

namespace lsekit {

namespace {

std::string line_error(long line, const std::string& what) {
    std::ostringstream os;
    os << "line " << line << ": " << what;
    return os.str();
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(field);
            field.clear();
        } else {
            field.push_back(ch);
        }
    }
    fields.push_back(field);
    return fields;
}

double parse_field(const std::string& field, long line) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || field.empty()) {
        throw ParseError(line_error(line, "expected a number, got \"" + field + "\""));
    }
    if (!std::isfinite(value)) {
        throw ParseError(line_error(line, "non-finite value \"" + field + "\""));
    }
    return value;
}

// Reads the next line, tolerating a trailing CR and a missing final newline.
bool get_line(std::istream& in, std::string& line, long& line_number) {
    if (!std::getline(in, line)) {
        return false;
    }
    ++line_number;
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    return true;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    return out;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string() + " for reading");
    }
    return in;
}

void finish_write(std::ostream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

} // namespace

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), value,
                      std::chars_format::general, 17);
    if (ec != std::errc{}) {
        throw NumericalError("failed to format a double");
    }
    return std::string(buf, ptr);
}

void write_samples_csv(std::ostream& out, const Dataset& ds) {
    for (Index i = 0; i < ds.dim(); ++i) {
        out << "phi_" << i << ",";
    }
    out << "y\n";
    for (const Sample& s : ds.samples()) {
        for (Index i = 0; i < ds.dim(); ++i) {
            out << format_double(s.regressor(i)) << ",";
        }
        out << format_double(s.output) << "\n";
    }
}

void write_samples_csv(const std::filesystem::path& path, const Dataset& ds) {
    auto out = open_for_write(path);
    write_samples_csv(out, ds);
    finish_write(out, path);
}

Dataset read_samples_csv(const std::filesystem::path& path) {
    auto in = open_for_read(path);
    CsvSampleReader reader(in);
    Dataset ds(reader.dim());
    while (auto sample = reader.next()) {
        ds.append(std::move(*sample));
    }
    return ds;
}

void write_truth_csv(std::ostream& out, const std::vector<Vector>& truth) {
    if (truth.empty()) {
        throw EmptyInputError("no ground-truth rows to write");
    }
    const Index dim = truth.front().size();
    out << "step";
    for (Index i = 0; i < dim; ++i) {
        out << ",theta_" << i;
    }
    out << "\n";
    for (std::size_t j = 0; j < truth.size(); ++j) {
        out << (j + 1);
        for (Index i = 0; i < dim; ++i) {
            out << "," << format_double(truth[j](i));
        }
        out << "\n";
    }
}

void write_truth_csv(const std::filesystem::path& path,
                     const std::vector<Vector>& truth) {
    auto out = open_for_write(path);
    write_truth_csv(out, truth);
    finish_write(out, path);
}

std::vector<Vector> read_truth_csv(const std::filesystem::path& path) {
    auto in = open_for_read(path);
    long line_number = 0;
    std::string line;
    if (!get_line(in, line, line_number)) {
        throw ParseError("line 1: missing header row");
    }
    const auto header = split_fields(line);
    if (header.size() < 2 || header[0] != "step") {
        throw ParseError(line_error(line_number, "expected header step,theta_0,..."));
    }
    const Index dim = static_cast<Index>(header.size()) - 1;
    for (Index i = 0; i < dim; ++i) {
        if (header[static_cast<std::size_t>(i) + 1] != "theta_" + std::to_string(i)) {
            throw ParseError(line_error(line_number, "expected header step,theta_0,..."));
        }
    }

    std::vector<Vector> truth;
    while (get_line(in, line, line_number)) {
        if (line.empty()) {
            continue;
        }
        const auto fields = split_fields(line);
        if (static_cast<Index>(fields.size()) != dim + 1) {
            throw ParseError(line_error(
                line_number, "expected " + std::to_string(dim + 1) + " fields, got " +
                                 std::to_string(fields.size())));
        }
        Vector theta(dim);
        for (Index i = 0; i < dim; ++i) {
            theta(i) = parse_field(fields[static_cast<std::size_t>(i) + 1],
                                   line_number);
        }
        truth.push_back(std::move(theta));
    }
    return truth;
}

void write_trace_header(std::ostream& out, Index dim) {
    out << "step,prediction,innovation";
    for (Index i = 0; i < dim; ++i) {
        out << ",theta_" << i;
    }
    out << ",gain_trace\n";
}

void write_trace_record(std::ostream& out, const rls::StepRecord& record) {
    out << record.step << "," << format_double(record.prediction) << ","
        << format_double(record.innovation);
    for (Index i = 0; i < record.theta_hat.size(); ++i) {
        out << "," << format_double(record.theta_hat(i));
    }
    out << "," << format_double(record.gain_trace) << "\n";
}

std::vector<rls::StepRecord> read_trace_csv(const std::filesystem::path& path) {
    auto in = open_for_read(path);
    long line_number = 0;
    std::string line;
    if (!get_line(in, line, line_number)) {
        throw ParseError("line 1: missing header row");
    }
    const auto header = split_fields(line);
    if (header.size() < 4 || header[0] != "step" || header[1] != "prediction" ||
        header[2] != "innovation" || header.back() != "gain_trace") {
        throw ParseError(line_error(
            line_number, "expected header step,prediction,innovation,theta_0,...,gain_trace"));
    }
    const Index dim = static_cast<Index>(header.size()) - 4;
    if (dim < 1) {
        throw ParseError(line_error(line_number, "trace header has no theta columns"));
    }

    std::vector<rls::StepRecord> records;
    while (get_line(in, line, line_number)) {
        if (line.empty()) {
            continue;
        }
        const auto fields = split_fields(line);
        if (static_cast<Index>(fields.size()) != dim + 4) {
            throw ParseError(line_error(
                line_number, "expected " + std::to_string(dim + 4) + " fields, got " +
                                 std::to_string(fields.size())));
        }
        rls::StepRecord rec;
        rec.step = static_cast<Index>(parse_field(fields[0], line_number));
        rec.prediction = parse_field(fields[1], line_number);
        rec.innovation = parse_field(fields[2], line_number);
        rec.theta_hat = Vector(dim);
        for (Index i = 0; i < dim; ++i) {
            rec.theta_hat(i) =
                parse_field(fields[static_cast<std::size_t>(i) + 3], line_number);
        }
        rec.gain_trace = parse_field(fields.back(), line_number);
        records.push_back(std::move(rec));
    }
    return records;
}

CsvSampleReader::CsvSampleReader(const std::filesystem::path& path)
    : file_(path), in_(&file_) {
    if (!file_) {
        throw IoError("cannot open " + path.string() + " for reading");
    }
    read_header();
}

CsvSampleReader::CsvSampleReader(std::istream& in) : in_(&in) { read_header(); }

void CsvSampleReader::read_header() {
    std::string line;
    if (!get_line(*in_, line, line_number_)) {
        throw ParseError("line 1: missing header row");
    }
    const auto header = split_fields(line);
    if (header.size() < 2 || header.back() != "y") {
        throw ParseError(
            line_error(line_number_, "expected header phi_0,...,phi_{n-1},y"));
    }
    dim_ = static_cast<Index>(header.size()) - 1;
    for (Index i = 0; i < dim_; ++i) {
        if (header[static_cast<std::size_t>(i)] != "phi_" + std::to_string(i)) {
            throw ParseError(
                line_error(line_number_, "expected header phi_0,...,phi_{n-1},y"));
        }
    }
}

std::optional<Sample> CsvSampleReader::next() {
    std::string line;
    while (get_line(*in_, line, line_number_)) {
        if (line.empty()) {
            continue;  // ignore a trailing blank line
        }
        const auto fields = split_fields(line);
        if (static_cast<Index>(fields.size()) != dim_ + 1) {
            throw ParseError(line_error(
                line_number_, "expected " + std::to_string(dim_ + 1) + " fields, got " +
                                  std::to_string(fields.size())));
        }
        Sample sample{Vector(dim_), 0.0};
        for (Index i = 0; i < dim_; ++i) {
            sample.regressor(i) =
                parse_field(fields[static_cast<std::size_t>(i)], line_number_);
        }
        sample.output = parse_field(fields.back(), line_number_);
        return sample;
    }
    return std::nullopt;
}

} // namespace lsekit
