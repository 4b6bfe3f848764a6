#include "spin7/octonion.hpp"

namespace spin7 {

namespace {

FanoTable build_table() {
    FanoTable t{};
    for (const auto& line : kFanoLines) {
        for (int r = 0; r < 3; ++r) {
            const int i = line[static_cast<std::size_t>(r)];
            const int j = line[static_cast<std::size_t>((r + 1) % 3)];
            const int k = line[static_cast<std::size_t>((r + 2) % 3)];
            t.sign[i][j] = 1;
            t.index[i][j] = k;
            t.sign[j][i] = -1;
            t.index[j][i] = k;
        }
    }
    return t;
}

}  // namespace

const FanoTable& fano_table() {
    static const FanoTable table = build_table();
    return table;
}

BasisProduct basis_product(int i, int j) {
    if (i == 0) return {1, j};
    if (j == 0) return {1, i};
    if (i == j) return {-1, 0};
    const auto& t = fano_table();
    return {t.sign[i][j], t.index[i][j]};
}

}  // namespace spin7
