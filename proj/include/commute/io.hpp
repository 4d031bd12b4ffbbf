#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "commute/applications.hpp"
#include "commute/joint_diag.hpp"
#include "commute/types.hpp"

namespace commute::io {

using nlohmann::json;

// Matrix file schema: {"n": int, "re": [[...]], "im": [[...]]}
json matrix_to_json(const HermitianMatrix& m);
HermitianMatrix matrix_from_json(const json& j);

// Tuple schema: {"d": int, "components": [matrix, ...]}
json tuple_to_json(const SelfAdjointTuple& s);
SelfAdjointTuple tuple_from_json(const json& j);

// Joint diagonalization output: {"U_re", "U_im", "eigs", "groups"}
json diag_to_json(const JointDiagonalization& jd);

json certificate_to_json(const Certificate& c);

json load_json_file(const std::string& path);          // throws MalformedInput
void write_json_file(const std::string& path, const json& j);

/// CSV with a header row, comma separators, '.' decimal point, %.17g values
/// (lossless round-trip).
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);
    void row(const std::vector<double>& values);
    const std::string& str() const { return out_; }

private:
    std::size_t columns_;
    std::string out_;
};

std::string format_double(double v);   // %.17g

/// Parse a CSV produced by CsvWriter; returns rows of doubles.
std::vector<std::vector<double>> read_csv(const std::string& content,
                                          std::vector<std::string>* header = nullptr);

}  // namespace commute::io
