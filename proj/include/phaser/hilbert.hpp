#ifndef PHASER_HILBERT_HPP
#define PHASER_HILBERT_HPP

#include <stdexcept>
#include <utility>

namespace phaser {

// Composite space of n_qd two-level emitters and one bosonic mode truncated
// at Fock level n_max.  Global index i = q*(n_max+1) + n with the Fock index
// n fastest-varying; q is the emitter bitstring with emitter 1 as the most
// significant bit, bit 0 = |v>, bit 1 = |c>.
struct HilbertConfig {
    int n_qd = 1;
    int n_max = 0;

    HilbertConfig() = default;
    HilbertConfig(int n_qd_, int n_max_) : n_qd(n_qd_), n_max(n_max_)
    {
        if (n_qd < 1)
            throw std::invalid_argument("HilbertConfig: n_qd must be >= 1");
        if (n_max < 0)
            throw std::invalid_argument("HilbertConfig: n_max must be >= 0");
        if (n_qd > 20)
            throw std::invalid_argument("HilbertConfig: n_qd too large");
    }

    int fock_dim() const { return n_max + 1; }
    int qd_dim() const { return 1 << n_qd; }
    int dim() const { return qd_dim() * fock_dim(); }

    int index(int q, int n) const { return q * fock_dim() + n; }
    std::pair<int, int> decode(int i) const
    {
        return {i / fock_dim(), i % fock_dim()};
    }

    // Bit of emitter `site` (1-based, emitter 1 = MSB) in the sector label q.
    int emitter_bit(int q, int site) const
    {
        return (q >> (n_qd - site)) & 1;
    }

    friend bool operator==(const HilbertConfig& a, const HilbertConfig& b)
    {
        return a.n_qd == b.n_qd && a.n_max == b.n_max;
    }
    friend bool operator!=(const HilbertConfig& a, const HilbertConfig& b)
    {
        return !(a == b);
    }
};

} // namespace phaser

#endif
