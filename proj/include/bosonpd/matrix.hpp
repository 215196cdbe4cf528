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

#ifndef BOSONPD_MATRIX_HPP
#define BOSONPD_MATRIX_HPP

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace bosonpd {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

/// Throws ValidationError if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, const std::string& what = "matrix");

/// max |(U^dag U - I)_{ij}|.
double unitarity_defect(const ComplexMatrix& u);
bool is_unitary(const ComplexMatrix& u, double tol = 1e-10);

ComplexMatrix submatrix(const ComplexMatrix& m, const std::vector<int>& rows,
                        const std::vector<int>& cols);
RealMatrix submatrix(const RealMatrix& m, const std::vector<int>& rows,
                     const std::vector<int>& cols);

/// Elementwise |m_ij|^2.
RealMatrix abs_squared(const ComplexMatrix& m);

/// JSON wire format: nested arrays of [re, im] pairs, row-major.
std::string matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const std::string& text);
ComplexMatrix load_matrix(const std::string& path);

} // namespace bosonpd

#endif
