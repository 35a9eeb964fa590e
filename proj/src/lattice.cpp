#include "lattice.hpp"

#include <string>

namespace hilbert::detail {

Lattice::Lattice(const ExponentVector& g) : g_(g), n_(g.size())
{
    requireValidBound(g_);
    if (n_ > kMaxLatticeDimension)
        throw PreconditionError("too many variables for the dense search: " + std::to_string(n_));
    stride_.assign(n_, 0);
    for (std::size_t i = n_; i-- > 0;) {
        stride_[i] = static_cast<Index>(size_);
        size_ *= static_cast<std::size_t>(g_[i]) + 1;
        if (size_ > kMaxDenseLatticeSize)
            throw PreconditionError("box [0,g] has too many points for the dense search");
        if (g_[i] > 1)
            squarefree_ = false;
        if (g_[i] == 0)
            ++pinned_;
    }
    coords_.assign(size_ * n_, 0);
    rho_.assign(size_, 0);
    for (std::size_t idx = 0; idx < size_; ++idx) {
        std::size_t rest = idx;
        int r = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            const auto c = static_cast<int>(rest / stride_[i]);
            rest %= stride_[i];
            coords_[idx * n_ + i] = static_cast<std::uint16_t>(c);
            r += c == g_[i];
        }
        rho_[idx] = static_cast<std::uint8_t>(r);
    }
}

Lattice::Index Lattice::index(const ExponentVector& a) const
{
    requireSameDimension(a, g_);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        if (a[i] > g_[i])
            throw PreconditionError("point lies above the degree bound");
        idx += static_cast<std::size_t>(a[i]) * stride_[i];
    }
    return static_cast<Index>(idx);
}

ExponentVector Lattice::point(Index idx) const
{
    std::vector<int> c(n_);
    for (std::size_t i = 0; i < n_; ++i)
        c[i] = coord(idx, i);
    return ExponentVector(std::move(c));
}

bool Lattice::leq(Index a, Index b) const
{
    if (squarefree_)
        return (a & ~b) == 0;
    for (std::size_t i = 0; i < n_; ++i)
        if (coord(a, i) > coord(b, i))
            return false;
    return true;
}

std::uint64_t Lattice::boxSize(Index low, Index high) const
{
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n_; ++i)
        count *= static_cast<std::uint64_t>(coord(high, i) - coord(low, i) + 1);
    return count;
}

} // namespace hilbert::detail
