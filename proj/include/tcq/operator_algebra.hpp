// Copyright 2026 The tcq Authors
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

#include <complex>
#include <optional>
#include <string>

#include <Eigen/Dense>

namespace tcq {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Photon space cut at n_max quanta. Entries whose photon index exceeds
/// n_max - buffer are considered polluted by the truncation and are left out
/// of every comparison.
struct FockTruncation {
    int n_max = 40;
    int buffer = 8;

    int dim() const { return n_max + 1; }
    int trusted_max() const { return n_max - buffer; }
    void validate() const;
};

enum class Pauli { Plus, Minus, Z, X, Y, Id };

/// Dense operator on (factor space) x (truncated photon space).
///
/// The factor space is the atomic register (dimension 2^n_atoms) or, for
/// spin blocks, a (2S+1) dimensional multiplet. The photon factor is
/// rightmost. Without a truncation the operator acts on the factor only.
class Operator {
   public:
    Operator() = default;
    Operator(Mat data, int factor_dim, std::optional<FockTruncation> fock);

    static Operator on_atoms(Mat data, int n_atoms, std::optional<FockTruncation> fock = std::nullopt);

    const Mat &data() const { return data_; }
    Mat &data() { return data_; }
    int dim() const { return static_cast<int>(data_.rows()); }
    int factor_dim() const { return factor_dim_; }
    const std::optional<FockTruncation> &fock() const { return fock_; }

    /// Photon number of basis index i (0 without a photon factor).
    int photon_of(int i) const;
    /// Factor (atomic or multiplet) index of basis index i.
    int factor_of(int i) const;

    Operator adjoint() const;

    friend Operator operator*(const Operator &a, const Operator &b);
    friend Operator operator+(const Operator &a, const Operator &b);
    friend Operator operator-(const Operator &a, const Operator &b);
    friend Operator operator*(cplx s, const Operator &a);

   private:
    void check_compatible(const Operator &other, const char *op) const;

    Mat data_;
    int factor_dim_ = 1;
    std::optional<FockTruncation> fock_;
};

/// Photon annihilation operator a on the truncated space.
Operator annihilation(const FockTruncation &tr);
/// Photon number operator N = a^dagger a.
Operator number_operator(const FockTruncation &tr);
/// Identity on the truncated photon space.
Operator photon_identity(const FockTruncation &tr);

/// Single-atom operator acting on atom j (1-based, atom 1 leftmost) of an
/// n-atom register. sigma_+ raises |-> to |+>, with |+> = (1, 0).
Operator pauli_embed(Pauli which, int j, int n);

/// Collective operators S_+, S_- and S_3 = (1/2) sum sigma_3.
Operator collective(Pauli which, int n);

/// Tensor product a (x) b. The truncation of the result is taken from b.
Operator kron(const Operator &a, const Operator &b);
Mat kron(const Mat &a, const Mat &b);

/// A_n = S_+ (x) a + S_- (x) a^dagger, for n in {1, 2, 3}.
Operator coupling_operator(int n, const FockTruncation &tr);

/// exp(scale * X) by scaling and squaring with a Taylor core.
Mat oracle_expm(const Mat &x, cplx scale = 1.0);
Operator oracle_expm(const Operator &x, cplx scale = 1.0);

/// Largest |a_ij - b_ij| over entries with both photon indices trusted.
double masked_max_deviation(const Operator &a, const Operator &b);
/// masked_max_deviation divided by the largest masked |b_ij|.
double masked_relative_deviation(const Operator &a, const Operator &b);
/// Largest |(U^dagger U - 1)_ij| over trusted entries.
double masked_unitarity_defect(const Operator &u);

/// max |a_ij - b_ij| for plain matrices.
double max_abs_deviation(const Mat &a, const Mat &b);

}  // namespace tcq
