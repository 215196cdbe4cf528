/*
 * Copyright 2026 The bosonpd developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "bosonpd/matrix.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bosonpd/errors.hpp"

namespace bosonpd {

void require_finite(const ComplexMatrix& m, const std::string& what) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const Complex v = m(i, j);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw ValidationError(what + ": non-finite entry at (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")");
        }
}

double unitarity_defect(const ComplexMatrix& u) {
    const ComplexMatrix d =
        u.adjoint() * u - ComplexMatrix::Identity(u.cols(), u.cols());
    return d.cwiseAbs().maxCoeff();
}

bool is_unitary(const ComplexMatrix& u, double tol) {
    return u.rows() == u.cols() && unitarity_defect(u) <= tol;
}

namespace {

template <typename M>
M submatrix_impl(const M& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    M out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < 0 || rows[i] >= m.rows())
            throw ValidationError("submatrix: row index out of range");
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j] < 0 || cols[j] >= m.cols())
                throw ValidationError("submatrix: column index out of range");
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                m(rows[i], cols[j]);
        }
    }
    return out;
}

} // namespace

ComplexMatrix submatrix(const ComplexMatrix& m, const std::vector<int>& rows,
                        const std::vector<int>& cols) {
    return submatrix_impl(m, rows, cols);
}

RealMatrix submatrix(const RealMatrix& m, const std::vector<int>& rows,
                     const std::vector<int>& cols) {
    return submatrix_impl(m, rows, cols);
}

RealMatrix abs_squared(const ComplexMatrix& m) { return m.cwiseAbs2(); }

std::string matrix_to_json(const ComplexMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return rows.dump();
}

ComplexMatrix matrix_from_json(const std::string& text) {
    nlohmann::json data;
    try {
        data = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("matrix_from_json: ") + e.what());
    }
    if (!data.is_array() || data.empty())
        throw ValidationError("matrix_from_json: expected a non-empty array of rows");
    const std::size_t rows = data.size();
    const std::size_t cols = data[0].is_array() ? data[0].size() : 0;
    if (cols == 0) throw ValidationError("matrix_from_json: empty rows");
    ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (!data[i].is_array() || data[i].size() != cols)
            throw ValidationError("matrix_from_json: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) {
            const auto& cell = data[i][j];
            if (cell.is_number()) {
                m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    Complex(cell.get<double>(), 0.0);
            } else if (cell.is_array() && cell.size() == 2) {
                m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    Complex(cell[0].get<double>(), cell[1].get<double>());
            } else {
                throw ValidationError("matrix_from_json: cells must be numbers or [re, im]");
            }
        }
    }
    require_finite(m, "matrix_from_json");
    return m;
}

ComplexMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("load_matrix: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return matrix_from_json(buf.str());
}

} // namespace bosonpd
