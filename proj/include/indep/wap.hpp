// The sparse weakly-almost-periodic subshift: level j owns the support
// positions {m_k : S_{j-1} < k <= S_j} and contributes every 0/1 pattern on
// them; the orbit closure adds the configurations with at most one nonzero
// coordinate.  Canonical instantiation m_k = 2^k, k_n = n.

#pragma once

#include <vector>

#include "indep/word.hpp"

namespace indep {

struct WapSpec {
    int levels = 0;
    std::vector<long long> positions;   // m_1 < m_2 < ... < m_{S_levels}
    std::vector<int> block_sizes;       // k_1 .. k_levels
    std::vector<int> partial_sums;      // S_1 .. S_levels
};

WapSpec build_wap(int levels);

// Support positions of level j (1-based).
std::vector<long long> wap_block_support(const WapSpec& spec, int j);

// m_j - m_i > m_i - m_k for all j > i > k, checked for indices up to max_index
// on the canonical m_k = 2^k rule.
bool wap_gap_condition(int max_index);

}  // namespace indep
