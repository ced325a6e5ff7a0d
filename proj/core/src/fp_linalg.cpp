#include "ringlab/fp_linalg.hpp"

#include "ringlab/error.hpp"

namespace ringlab {

namespace {

inline int64_t lowest_set(const std::vector<uint64_t>& row) {
    for (size_t w = 0; w < row.size(); ++w)
        if (row[w]) return int64_t(w * 64 + size_t(__builtin_ctzll(row[w])));
    return -1;
}

inline void xor_into(std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    for (size_t w = 0; w < a.size(); ++w) a[w] ^= b[w];
}

inline int64_t lowest_nonzero(const std::vector<uint8_t>& row) {
    for (size_t i = 0; i < row.size(); ++i)
        if (row[i]) return int64_t(i);
    return -1;
}

} // namespace

FpRowSpace::FpRowSpace(uint32_t p, size_t width)
    : p_(p), width_(width), words_((width + 63) / 64) {
    if (p < 2) throw Error(ErrorCode::BadTables, "row space needs a prime modulus");
}

uint32_t FpRowSpace::inv_mod(uint32_t a) const {
    for (uint32_t b = 1; b < p_; ++b)
        if ((uint64_t(a) * b) % p_ == 1) return b;
    throw Error(ErrorCode::BadTables, "no inverse mod p");
}

bool FpRowSpace::insert(const std::vector<std::pair<uint32_t, uint32_t>>& sparse) {
    if (p_ == 2) {
        std::vector<uint64_t> row(words_, 0);
        for (auto [i, c] : sparse)
            if (c % 2) row[i / 64] ^= uint64_t(1) << (i % 64);
        for (;;) {
            int64_t piv = lowest_set(row);
            if (piv < 0) return false;
            auto it = rows2_.find(uint32_t(piv));
            if (it == rows2_.end()) {
                rows2_.emplace(uint32_t(piv), std::move(row));
                return true;
            }
            xor_into(row, it->second);
        }
    }
    std::vector<uint8_t> row(width_, 0);
    for (auto [i, c] : sparse) row[i] = uint8_t((row[i] + c) % p_);
    for (;;) {
        int64_t piv = lowest_nonzero(row);
        if (piv < 0) return false;
        auto it = rowsp_.find(uint32_t(piv));
        if (it == rowsp_.end()) {
            uint32_t inv = inv_mod(row[piv]);
            for (auto& v : row) v = uint8_t((uint64_t(v) * inv) % p_);
            rowsp_.emplace(uint32_t(piv), std::move(row));
            return true;
        }
        // row -= row[piv] * pivot_row (pivot rows are monic)
        uint32_t c = row[piv];
        const auto& pr = it->second;
        for (size_t i = size_t(piv); i < width_; ++i)
            row[i] = uint8_t((row[i] + uint64_t(p_ - 1) * c % p_ * pr[i]) % p_);
    }
}

void FpRowSpace::reduce(std::vector<uint32_t>& dense) const {
    if (p_ == 2) {
        std::vector<uint64_t> v(words_, 0);
        for (size_t i = 0; i < width_; ++i)
            if (dense[i] % 2) v[i / 64] ^= uint64_t(1) << (i % 64);
        for (size_t w = 0; w < words_; ++w) {
            uint64_t free_bits = 0; // confirmed non-pivot coordinates of this word
            for (;;) {
                uint64_t rem = v[w] & ~free_bits;
                if (!rem) break;
                uint64_t bit = rem & (~rem + 1);
                uint32_t idx = uint32_t(w * 64 + size_t(__builtin_ctzll(rem)));
                auto it = rows2_.find(idx);
                if (it != rows2_.end())
                    xor_into(v, it->second); // clears idx; only touches bits >= idx
                else
                    free_bits |= bit;
            }
        }
        for (size_t i = 0; i < width_; ++i) dense[i] = (v[i / 64] >> (i % 64)) & 1;
        return;
    }
    for (auto& x : dense) x %= p_;
    for (size_t i = 0; i < width_; ++i) {
        if (!dense[i]) continue;
        auto it = rowsp_.find(uint32_t(i));
        if (it == rowsp_.end()) continue;
        uint32_t c = dense[i];
        const auto& pr = it->second;
        for (size_t j = i; j < width_; ++j)
            dense[j] = uint32_t((dense[j] + uint64_t(p_ - 1) * c % p_ * pr[j]) % p_);
    }
}

bool FpRowSpace::contains(const std::vector<uint32_t>& dense) const {
    std::vector<uint32_t> v = dense;
    reduce(v);
    for (uint32_t x : v)
        if (x % p_) return false;
    return true;
}

void FpRowSpace::canonicalize() {
    if (p_ == 2) {
        // descending pivots: each pivot row is fully reduced before use
        for (auto it = rows2_.rbegin(); it != rows2_.rend(); ++it) {
            uint32_t piv = it->first;
            for (auto& [q, row] : rows2_) {
                if (q >= piv) break;
                if ((row[piv / 64] >> (piv % 64)) & 1) xor_into(row, it->second);
            }
        }
        return;
    }
    for (auto it = rowsp_.rbegin(); it != rowsp_.rend(); ++it) {
        uint32_t piv = it->first;
        for (auto& [q, row] : rowsp_) {
            if (q >= piv) break;
            if (row[piv]) {
                uint32_t c = row[piv];
                const auto& pr = it->second;
                for (size_t j = piv; j < width_; ++j)
                    row[j] = uint8_t((row[j] + uint64_t(p_ - 1) * c % p_ * pr[j]) % p_);
            }
        }
    }
}

std::vector<std::vector<std::pair<uint32_t, uint32_t>>> FpRowSpace::rows() const {
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> out;
    if (p_ == 2) {
        for (const auto& [piv, row] : rows2_) {
            std::vector<std::pair<uint32_t, uint32_t>> sparse;
            for (size_t w = 0; w < words_; ++w) {
                uint64_t bits = row[w];
                while (bits) {
                    uint32_t idx = uint32_t(w * 64 + size_t(__builtin_ctzll(bits)));
                    sparse.emplace_back(idx, 1);
                    bits &= bits - 1;
                }
            }
            out.push_back(std::move(sparse));
        }
    } else {
        for (const auto& [piv, row] : rowsp_) {
            std::vector<std::pair<uint32_t, uint32_t>> sparse;
            for (size_t i = 0; i < width_; ++i)
                if (row[i]) sparse.emplace_back(uint32_t(i), row[i]);
            out.push_back(std::move(sparse));
        }
    }
    return out;
}

std::vector<uint32_t> FpRowSpace::pivots() const {
    std::vector<uint32_t> out;
    if (p_ == 2)
        for (const auto& [piv, row] : rows2_) out.push_back(piv);
    else
        for (const auto& [piv, row] : rowsp_) out.push_back(piv);
    return out;
}

} // namespace ringlab
