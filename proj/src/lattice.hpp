#ifndef HILBERT_SRC_LATTICE_HPP
#define HILBERT_SRC_LATTICE_HPP

// Dense indexing of the box [0, g]. Index order equals lexicographic order of
// the points (coordinate 0 most significant). When every g_i ≤ 1 the index of
// a point is the bitmask of its nonzero coordinates.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hilbert/exponent.hpp"

namespace hilbert::detail {

inline constexpr std::size_t kMaxDenseLatticeSize = std::size_t{1} << 22;
inline constexpr std::size_t kMaxLatticeDimension = 64;

class Lattice
{
  public:
    using Index = std::uint32_t;

    explicit Lattice(const ExponentVector& g);

    std::size_t dimension() const noexcept { return n_; }
    std::size_t size() const noexcept { return size_; }
    const ExponentVector& bound() const noexcept { return g_; }
    bool squarefree() const noexcept { return squarefree_; }
    /// Coordinates with g_i = 0; they are saturated at every point.
    int pinnedCount() const noexcept { return pinned_; }

    Index index(const ExponentVector& a) const;
    ExponentVector point(Index idx) const;
    int coord(Index idx, std::size_t i) const { return coords_[static_cast<std::size_t>(idx) * n_ + i]; }
    int rho(Index idx) const { return rho_[idx]; }
    bool leq(Index a, Index b) const;
    std::uint64_t boxSize(Index low, Index high) const;

    /// Calls visit(idx) for every point of [low, high] until it returns false.
    /// Returns false iff the visit was cut short. Order is unspecified.
    template <class Visitor>
    bool forEachInBox(Index low, Index high, Visitor&& visit) const
    {
        if (squarefree_) {
            const Index free = high ^ low;
            Index sub = free;
            for (;;) {
                if (!visit(static_cast<Index>(low | sub)))
                    return false;
                if (sub == 0)
                    return true;
                sub = (sub - 1) & free;
            }
        }
        std::array<int, kMaxLatticeDimension> cur{};
        for (std::size_t i = 0; i < n_; ++i)
            cur[i] = coord(low, i);
        Index idx = low;
        for (;;) {
            if (!visit(idx))
                return false;
            std::size_t i = n_;
            for (;;) {
                if (i == 0)
                    return true;
                --i;
                if (cur[i] < coord(high, i)) {
                    ++cur[i];
                    idx += stride_[i];
                    break;
                }
                idx -= static_cast<Index>(cur[i] - coord(low, i)) * stride_[i];
                cur[i] = coord(low, i);
            }
        }
    }

  private:
    ExponentVector g_;
    std::size_t n_ = 0;
    std::size_t size_ = 1;
    bool squarefree_ = true;
    int pinned_ = 0;
    std::vector<Index> stride_;
    std::vector<std::uint16_t> coords_;
    std::vector<std::uint8_t> rho_;
};

} // namespace hilbert::detail

#endif
