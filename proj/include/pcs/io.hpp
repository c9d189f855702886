// Copyright 2026 The PCS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <iosfwd>

#include "pcs/mpo.hpp"
#include "pcs/numerics.hpp"

namespace pcs {

// RHO1: "RHO1", version byte 1, u32 n, then 4^n complex entries in row-major
// order as little-endian float64 pairs (re, im).
//
// MPO1: "MPO1", version byte 1, u32 n, u32 bonds D_0 .. D_n, then for each
// core its entries in (left, i, j, right) lexicographic order as
// little-endian float64 pairs.
//
// The readers throw std::runtime_error on truncated or malformed input.

inline constexpr unsigned char kFormatVersion = 1;

void write_matrix(std::ostream& out, const ComplexMatrix& m);
ComplexMatrix read_matrix(std::istream& in);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);
ComplexMatrix read_matrix_file(const std::filesystem::path& path);

void write_mpo(std::ostream& out, const MpoState& m);
MpoState read_mpo(std::istream& in);
void write_mpo_file(const std::filesystem::path& path, const MpoState& m);
MpoState read_mpo_file(const std::filesystem::path& path);

}  // namespace pcs
