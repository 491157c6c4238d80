#include "ckit/exactmat.hpp"

#include <cctype>

namespace ckit {

ResidueMatrix::ResidueMatrix(Storage entries, std::int64_t modulus)
    : entries_(std::move(entries)), modulus_(modulus) {
  if (modulus_ < 2) throw InvalidModulus("residue matrix: modulus must be >= 2");
  if (entries_.rows() != entries_.cols())
    throw DimensionMismatch("residue matrix: not square");
  entries_ = entries_.unaryExpr([m = modulus_](std::int64_t v) { return floor_mod(v, m); });
}

ResidueMatrix ResidueMatrix::identity(int n, std::int64_t modulus) {
  return ResidueMatrix(Storage::Identity(n, n), modulus);
}

int ResidueMatrix::entry_width(std::int64_t modulus) {
  int width = 1;
  for (std::int64_t top = modulus - 1; top > 0xff; top >>= 8) ++width;
  return width;
}

std::string ResidueMatrix::key() const {
  const int width = entry_width(modulus_);
  std::string out;
  out.reserve(static_cast<std::size_t>(entries_.size() * width));
  for (Eigen::Index r = 0; r < entries_.rows(); ++r) {
    for (Eigen::Index c = 0; c < entries_.cols(); ++c) {
      auto v = static_cast<std::uint64_t>(entries_(r, c));
      for (int b = width - 1; b >= 0; --b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
    }
  }
  return out;
}

ResidueMatrix ResidueMatrix::from_key(const std::string& key, int n, std::int64_t modulus) {
  const int width = entry_width(modulus);
  if (key.size() != static_cast<std::size_t>(n * n * width))
    throw InvalidModulus("residue key length does not match (n, m)");
  Storage s(n, n);
  std::size_t pos = 0;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      std::uint64_t v = 0;
      for (int b = 0; b < width; ++b) v = (v << 8) | static_cast<unsigned char>(key[pos++]);
      s(r, c) = static_cast<std::int64_t>(v);
    }
  }
  return ResidueMatrix(std::move(s), modulus);
}

ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b) {
  if (a.modulus() != b.modulus()) throw InvalidModulus("residue product: moduli differ");
  if (a.n() != b.n()) throw DimensionMismatch("residue product: dimension mismatch");
  // Entries are < m, so n * m^2 must fit; checked moduli stay far below 2^28.
  ResidueMatrix::Storage p = a.entries().lazyProduct(b.entries());
  return ResidueMatrix(std::move(p), a.modulus());
}

std::int64_t residue_det(const ResidueMatrix& a) {
  BigIntMatrix big = a.entries().cast<BigInt>();
  BigInt det = floor_mod(mat_det(big), BigInt(a.modulus()));
  return det.convert_to<std::int64_t>();
}

ResidueMatrix mat_mod(const BigIntMatrix& a, std::int64_t modulus) {
  if (modulus < 2) throw InvalidModulus("mat_mod: modulus must be >= 2");
  const BigInt m(modulus);
  ResidueMatrix::Storage s(a.rows(), a.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      s(r, c) = floor_mod(a(r, c), m).convert_to<std::int64_t>();
  return ResidueMatrix(std::move(s), modulus);
}

BigInt parse_bigint(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw ParseError("integer: no digits in '" + text + "'");
  for (std::size_t i = pos; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("integer: bad character in '" + text + "'");
  BigInt v(text.substr(pos));
  return negative ? BigInt(-v) : v;
}

}  // namespace ckit
