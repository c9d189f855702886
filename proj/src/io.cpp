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

#include "pcs/io.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pcs/errors.hpp"

namespace pcs {

namespace {

constexpr std::string_view kRhoMagic = "RHO1";
constexpr std::string_view kMpoMagic = "MPO1";

void put_u32(std::ostream& out, std::uint32_t v) {
  std::array<char, 4> bytes{};
  for (int k = 0; k < 4; ++k) bytes[static_cast<std::size_t>(k)] = static_cast<char>((v >> (8 * k)) & 0xffU);
  out.write(bytes.data(), bytes.size());
}

void put_f64(std::ostream& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  std::array<char, 8> bytes{};
  for (int k = 0; k < 8; ++k) bytes[static_cast<std::size_t>(k)] = static_cast<char>((bits >> (8 * k)) & 0xffU);
  out.write(bytes.data(), bytes.size());
}

void put_complex(std::ostream& out, Complex z) {
  put_f64(out, z.real());
  put_f64(out, z.imag());
}

void read_exact(std::istream& in, char* dst, std::size_t count) {
  in.read(dst, static_cast<std::streamsize>(count));
  if (static_cast<std::size_t>(in.gcount()) != count) throw std::runtime_error("unexpected end of file");
}

std::uint32_t get_u32(std::istream& in) {
  std::array<unsigned char, 4> bytes{};
  read_exact(in, reinterpret_cast<char*>(bytes.data()), bytes.size());
  std::uint32_t v = 0;
  for (int k = 0; k < 4; ++k) v |= static_cast<std::uint32_t>(bytes[static_cast<std::size_t>(k)]) << (8 * k);
  return v;
}

double get_f64(std::istream& in) {
  std::array<unsigned char, 8> bytes{};
  read_exact(in, reinterpret_cast<char*>(bytes.data()), bytes.size());
  std::uint64_t v = 0;
  for (int k = 0; k < 8; ++k) v |= static_cast<std::uint64_t>(bytes[static_cast<std::size_t>(k)]) << (8 * k);
  return std::bit_cast<double>(v);
}

Complex get_complex(std::istream& in) {
  const double re = get_f64(in);
  const double im = get_f64(in);
  return {re, im};
}

void write_header(std::ostream& out, std::string_view magic, std::uint32_t n) {
  out.write(magic.data(), static_cast<std::streamsize>(magic.size()));
  out.put(static_cast<char>(kFormatVersion));
  put_u32(out, n);
}

std::uint32_t read_header(std::istream& in, std::string_view magic) {
  std::array<char, 4> got{};
  read_exact(in, got.data(), got.size());
  if (std::string_view(got.data(), got.size()) != magic) {
    throw std::runtime_error("bad magic, expected " + std::string(magic));
  }
  char version = 0;
  read_exact(in, &version, 1);
  if (static_cast<unsigned char>(version) != kFormatVersion) {
    throw std::runtime_error("unsupported format version " + std::to_string(static_cast<int>(version)));
  }
  const std::uint32_t n = get_u32(in);
  if (n < 1 || n > static_cast<std::uint32_t>(kTolerances.dense_qubit_limit)) {
    throw std::runtime_error("qubit count " + std::to_string(n) + " out of range");
  }
  return n;
}

template <typename Fn>
void with_output(const std::filesystem::path& path, Fn&& fn) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  fn(out);
  out.flush();
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

template <typename Fn>
auto with_input(const std::filesystem::path& path, Fn&& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return fn(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

}  // namespace

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("write_matrix: matrix is not square");
  const int n = log2_exact(static_cast<std::size_t>(m.rows()));
  write_header(out, kRhoMagic, static_cast<std::uint32_t>(n));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) put_complex(out, m(r, c));
  }
}

ComplexMatrix read_matrix(std::istream& in) {
  const std::uint32_t n = read_header(in, kRhoMagic);
  const Eigen::Index dim = Eigen::Index{1} << n;
  ComplexMatrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = get_complex(in);
  }
  return m;
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m) {
  with_output(path, [&](std::ostream& out) { write_matrix(out, m); });
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  return with_input(path, [](std::istream& in) { return read_matrix(in); });
}

void write_mpo(std::ostream& out, const MpoState& m) {
  write_header(out, kMpoMagic, static_cast<std::uint32_t>(m.n_qubits()));
  for (Eigen::Index d : m.all_bond_dims()) put_u32(out, static_cast<std::uint32_t>(d));
  for (const MpoCore& core : m.cores()) {
    for (Eigen::Index a = 0; a < core.left; ++a) {
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          for (Eigen::Index b = 0; b < core.right; ++b) put_complex(out, core.slice(i, j)(a, b));
        }
      }
    }
  }
}

MpoState read_mpo(std::istream& in) {
  const std::uint32_t n = read_header(in, kMpoMagic);
  std::vector<Eigen::Index> bonds;
  for (std::uint32_t l = 0; l <= n; ++l) {
    const std::uint32_t d = get_u32(in);
    if (d < 1 || d > (1U << 20)) throw std::runtime_error("bond dimension " + std::to_string(d) + " out of range");
    bonds.push_back(d);
  }
  std::vector<MpoCore> cores;
  for (std::uint32_t l = 0; l < n; ++l) {
    MpoCore core;
    core.left = bonds[l];
    core.right = bonds[l + 1];
    for (ComplexMatrix& s : core.slices) s.resize(core.left, core.right);
    for (Eigen::Index a = 0; a < core.left; ++a) {
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          for (Eigen::Index b = 0; b < core.right; ++b) core.slice(i, j)(a, b) = get_complex(in);
        }
      }
    }
    cores.push_back(std::move(core));
  }
  try {
    return MpoState(std::move(cores));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
}

void write_mpo_file(const std::filesystem::path& path, const MpoState& m) {
  with_output(path, [&](std::ostream& out) { write_mpo(out, m); });
}

MpoState read_mpo_file(const std::filesystem::path& path) {
  return with_input(path, [](std::istream& in) { return read_mpo(in); });
}

}  // namespace pcs
