#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace mipt {

/// Bit pattern of one basis configuration.  Site n is bit n (LSB = site 0);
/// a set bit means spin up (charge 1).
using BitPattern = std::uint32_t;

constexpr int kMaxSites = 24;

std::uint64_t binomial(int n, int k);

/// Strictly increasing list of site indices in [0, L).
class SiteSet {
  public:
    SiteSet() = default;
    SiteSet(std::vector<int> sites, int num_sites);

    /// Contiguous range [first, first + count).
    static SiteSet range(int first, int count, int num_sites);
    /// All sites not in `a`.
    static SiteSet complement(const SiteSet& a);

    const std::vector<int>& sites() const { return sites_; }
    int size() const { return int(sites_.size()); }
    int num_sites() const { return num_sites_; }
    BitPattern mask() const { return mask_; }
    bool contains(int site) const { return (mask_ >> site) & 1u; }

  private:
    std::vector<int> sites_;
    int num_sites_ = 0;
    BitPattern mask_ = 0;
};

/// Ordered basis of the fixed-magnetization sector: all L-bit patterns with
/// exactly n_up set bits, sorted by numeric value.  Numeric order coincides
/// with colexicographic order of the up-site sets, so the inverse map is the
/// combinatorial-number-system rank and needs no hash table.
///
/// Immutable after construction; share freely across threads.
class SectorBasis {
  public:
    SectorBasis(int num_sites, int num_up);

    static std::shared_ptr<const SectorBasis> make(int num_sites, int num_up) {
        return std::make_shared<const SectorBasis>(num_sites, num_up);
    }

    int num_sites() const { return num_sites_; }
    int num_up() const { return num_up_; }
    std::size_t dim() const { return states_.size(); }
    const std::vector<BitPattern>& states() const { return states_; }
    BitPattern state(std::size_t index) const { return states_[index]; }

    /// Dense index of `pattern`; exact inverse of states().
    std::size_t index_of(BitPattern pattern) const;

    /// Total S_z of the sector in half units: n_up - L/2 * ... precisely
    /// (n_up - n_down) / 2.
    double magnetization() const { return 0.5 * (2 * num_up_ - num_sites_); }

  private:
    int num_sites_;
    int num_up_;
    std::vector<BitPattern> states_;
};

/// Rank of `pattern` among all `width`-bit patterns with the same popcount,
/// in numeric order.  Free function so subsystem maps can reuse it.
std::size_t colex_rank(BitPattern pattern);

/// Enumerate all `width`-bit patterns with `k` set bits in numeric order.
std::vector<BitPattern> enumerate_patterns(int width, int k);

}  // namespace mipt
