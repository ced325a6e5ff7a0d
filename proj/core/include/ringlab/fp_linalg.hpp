#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace ringlab {

/// Row space over F_p in reduced row echelon form, pivot = lowest nonzero
/// coordinate. Rows are dense; a packed bitset path handles p = 2, a byte
/// path handles other small primes. The echelon basis is canonical (RREF),
/// independent of insertion order.
class FpRowSpace {
  public:
    FpRowSpace(uint32_t p, size_t width);

    uint32_t p() const { return p_; }
    size_t width() const { return width_; }
    size_t rank() const { return p_ == 2 ? rows2_.size() : rowsp_.size(); }

    /// Inserts a row given as sparse (index, coeff) pairs; returns true if
    /// the rank grew.
    bool insert(const std::vector<std::pair<uint32_t, uint32_t>>& sparse);

    /// Canonical coset representative: eliminates every pivot coordinate.
    void reduce(std::vector<uint32_t>& dense) const;

    bool contains(const std::vector<uint32_t>& dense) const;

    /// Back-substitutes to full RREF. Call once after the last insert.
    void canonicalize();

    /// Echelon rows as sparse vectors, ascending pivot order.
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> rows() const;

    std::vector<uint32_t> pivots() const;

  private:
    uint32_t p_;
    size_t width_, words_;

    // p == 2: packed rows
    std::map<uint32_t, std::vector<uint64_t>> rows2_;
    // p != 2: byte rows
    std::map<uint32_t, std::vector<uint8_t>> rowsp_;

    uint32_t inv_mod(uint32_t a) const;
};

} // namespace ringlab
