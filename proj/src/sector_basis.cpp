#include "mipt/sector_basis.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace mipt {

namespace {

struct BinomialTable {
    std::uint64_t c[kMaxSites + 1][kMaxSites + 1] = {};
    BinomialTable() {
        for (int n = 0; n <= kMaxSites; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};

const BinomialTable& table() {
    static const BinomialTable t;
    return t;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n || n < 0 || n > kMaxSites) return 0;
    return table().c[n][k];
}

SiteSet::SiteSet(std::vector<int> sites, int num_sites)
    : sites_(std::move(sites)), num_sites_(num_sites) {
    for (std::size_t i = 0; i < sites_.size(); ++i) {
        const int s = sites_[i];
        if (s < 0 || s >= num_sites_)
            throw std::invalid_argument("SiteSet: site " + std::to_string(s) +
                                        " outside [0, " + std::to_string(num_sites_) + ")");
        if (i > 0 && sites_[i - 1] >= s)
            throw std::invalid_argument("SiteSet: sites must be strictly increasing");
        mask_ |= BitPattern(1) << s;
    }
}

SiteSet SiteSet::range(int first, int count, int num_sites) {
    std::vector<int> v(count);
    for (int i = 0; i < count; ++i) v[i] = first + i;
    return SiteSet(std::move(v), num_sites);
}

SiteSet SiteSet::complement(const SiteSet& a) {
    std::vector<int> v;
    v.reserve(a.num_sites() - a.size());
    for (int s = 0; s < a.num_sites(); ++s)
        if (!a.contains(s)) v.push_back(s);
    return SiteSet(std::move(v), a.num_sites());
}

std::size_t colex_rank(BitPattern pattern) {
    std::size_t rank = 0;
    int i = 1;
    while (pattern) {
        const int pos = std::countr_zero(pattern);
        rank += binomial(pos, i);
        pattern &= pattern - 1;
        ++i;
    }
    return rank;
}

std::vector<BitPattern> enumerate_patterns(int width, int k) {
    std::vector<BitPattern> out;
    out.reserve(binomial(width, k));
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    const BitPattern limit = (width >= 32) ? ~BitPattern(0) : (BitPattern(1) << width);
    BitPattern v = (BitPattern(1) << k) - 1;
    while (v < limit) {
        out.push_back(v);
        // Gosper's hack: next pattern with the same popcount.
        const BitPattern t = v | (v - 1);
        if (t == ~BitPattern(0)) break;
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
    return out;
}

SectorBasis::SectorBasis(int num_sites, int num_up)
    : num_sites_(num_sites), num_up_(num_up) {
    if (num_sites < 1 || num_sites > kMaxSites)
        throw std::invalid_argument("SectorBasis: L must be in [1, " +
                                    std::to_string(kMaxSites) + "], got " +
                                    std::to_string(num_sites));
    if (num_up < 0 || num_up > num_sites)
        throw std::invalid_argument("SectorBasis: n_up out of range");
    states_ = enumerate_patterns(num_sites, num_up);
}

std::size_t SectorBasis::index_of(BitPattern pattern) const {
    return colex_rank(pattern);
}

}  // namespace mipt
