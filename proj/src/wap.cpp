#include "indep/wap.hpp"

#include "indep/errors.hpp"

namespace indep {

WapSpec build_wap(int levels) {
    if (levels < 1) throw InputError("WAP levels must be >= 1");
    WapSpec spec;
    spec.levels = levels;
    int total = 0;
    for (int j = 1; j <= levels; ++j) {
        spec.block_sizes.push_back(j);
        total += j;
        spec.partial_sums.push_back(total);
    }
    long long m = 1;
    for (int k = 1; k <= total; ++k) {
        m *= 2;
        spec.positions.push_back(m);
    }
    return spec;
}

std::vector<long long> wap_block_support(const WapSpec& spec, int j) {
    if (j < 1 || j > spec.levels) throw InputError("WAP level out of range");
    int lo = j == 1 ? 0 : spec.partial_sums[static_cast<size_t>(j - 2)];
    int hi = spec.partial_sums[static_cast<size_t>(j - 1)];
    std::vector<long long> out;
    for (int k = lo; k < hi; ++k) out.push_back(spec.positions[static_cast<size_t>(k)]);
    return out;
}

bool wap_gap_condition(int max_index) {
    for (int k = 1; k <= max_index; ++k)
        for (int i = k + 1; i <= max_index; ++i)
            for (int j = i + 1; j <= max_index; ++j) {
                long long mj = 1ll << j, mi = 1ll << i, mk = 1ll << k;
                if (!(mj - mi > mi - mk)) return false;
            }
    return true;
}

}  // namespace indep
