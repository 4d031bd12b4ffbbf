#include "commute/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace commute::io {

json matrix_to_json(const HermitianMatrix& m) {
    const std::size_t n = m.dim();
    json re = json::array(), im = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json rrow = json::array(), irow = json::array();
        for (std::size_t j = 0; j < n; ++j) {
            rrow.push_back(m(i, j).real());
            irow.push_back(m(i, j).imag());
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    return json{{"n", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

HermitianMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("re") || !j.contains("im"))
        throw MalformedInput("matrix object needs fields n, re, im");
    const auto n = j.at("n").get<std::size_t>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (!re.is_array() || !im.is_array() || re.size() != n || im.size() != n)
        throw MalformedInput("matrix re/im must be n x n arrays");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!re[i].is_array() || !im[i].is_array() || re[i].size() != n || im[i].size() != n)
            throw MalformedInput("matrix re/im must be n x n arrays");
        for (std::size_t k = 0; k < n; ++k)
            m(i, k) = Complex{re[i][k].get<double>(), im[i][k].get<double>()};
    }
    HermitianMatrix h(m);
    if (h.symmetrization_defect() > 1e-9)
        throw MalformedInput("matrix is visibly non-Hermitian (defect " +
                             std::to_string(h.symmetrization_defect()) + ")");
    return h;
}

json tuple_to_json(const SelfAdjointTuple& s) {
    json comps = json::array();
    for (int r = 0; r < s.count(); ++r) comps.push_back(matrix_to_json(s.component(r)));
    return json{{"d", s.count()}, {"components", std::move(comps)}};
}

SelfAdjointTuple tuple_from_json(const json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("components"))
        throw MalformedInput("tuple object needs fields d, components");
    const auto d = j.at("d").get<std::size_t>();
    const auto& comps = j.at("components");
    if (!comps.is_array() || comps.size() != d)
        throw MalformedInput("tuple components must be an array of length d");
    std::vector<HermitianMatrix> out;
    out.reserve(d);
    for (const auto& c : comps) out.push_back(matrix_from_json(c));
    try {
        return SelfAdjointTuple(std::move(out));
    } catch (const DimensionMismatch& e) {
        throw MalformedInput(e.what());
    }
}

json diag_to_json(const JointDiagonalization& jd) {
    const std::size_t n = jd.u.rows();
    json ure = json::array(), uim = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json rrow = json::array(), irow = json::array();
        for (std::size_t k = 0; k < n; ++k) {
            rrow.push_back(jd.u(i, k).real());
            irow.push_back(jd.u(i, k).imag());
        }
        ure.push_back(std::move(rrow));
        uim.push_back(std::move(irow));
    }
    json eigs = json::array();
    for (const auto& row : jd.eigs) eigs.push_back(row);
    json groups = json::array();
    for (auto [b, e] : jd.groups) {
        json members = json::array();
        for (int i = b; i < e; ++i) members.push_back(i);
        groups.push_back(std::move(members));
    }
    return json{{"U_re", std::move(ure)},
                {"U_im", std::move(uim)},
                {"eigs", std::move(eigs)},
                {"groups", std::move(groups)}};
}

json certificate_to_json(const Certificate& c) {
    json j{{"verdict", Certificate::verdict_name(c.verdict)},
           {"min_eigenvalue_observed", c.min_eigenvalue_observed},
           {"seed", c.seed},
           {"samples", c.samples}};
    if (c.witness) {
        j["witness"] = json{{"draw_seed", c.witness->draw_seed},
                            {"sample_index", c.witness->sample_index},
                            {"tstar", c.witness->tstar},
                            {"min_eigenvalue", c.witness->min_eigenvalue}};
    }
    if (c.chord_min_eigenvalue) j["chord_min_eigenvalue"] = *c.chord_min_eigenvalue;
    if (c.second_derivative_min_eigenvalue)
        j["second_derivative_min_eigenvalue"] = *c.second_derivative_min_eigenvalue;
    if (c.grid_used > 0) j["grid_used"] = c.grid_used;
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw MalformedInput("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("IoError", "cannot write file: " + path);
    out << j.dump(2) << '\n';
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out_ += ',';
        out_ += header[i];
    }
    out_ += '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != columns_) throw InvalidArgument("csv row width mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out_ += ',';
        out_ += format_double(values[i]);
    }
    out_ += '\n';
}

std::vector<std::vector<double>> read_csv(const std::string& content,
                                          std::vector<std::string>* header) {
    std::istringstream in(content);
    std::string line;
    std::vector<std::vector<double>> rows;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        if (first) {
            if (header) {
                while (std::getline(ls, cell, ',')) header->push_back(cell);
            }
            first = false;
            continue;
        }
        std::vector<double> row;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace commute::io
