#include "sepsys/corpus.hpp"

#include "sepsys/errors.hpp"

namespace sepsys {

int Rng::below(int n) {
    SEPSYS_REQUIRE(n > 0, "Rng::below needs a positive bound");
    uint64_t limit = UINT64_MAX - UINT64_MAX % static_cast<uint64_t>(n);
    for (;;) {
        uint64_t x = next();
        if (x < limit) return static_cast<int>(x % static_cast<uint64_t>(n));
    }
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::vector<std::pair<int, int>> gen_complete(int n) {
    SEPSYS_REQUIRE(n >= 0, "complete graph needs n >= 0");
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<int, int>> gen_gnp(int n, double p, uint64_t seed) {
    SEPSYS_REQUIRE(n >= 0 && p >= 0.0 && p <= 1.0, "gnp needs n >= 0 and p in [0,1]");
    Rng rng(seed);
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.unit() < p) out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<int, int>> gen_hypercube(int dim) {
    SEPSYS_REQUIRE(dim >= 1 && dim <= 16, "hypercube dimension out of range");
    std::vector<std::pair<int, int>> out;
    int n = 1 << dim;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < dim; ++b) {
            int w = v ^ (1 << b);
            if (v < w) out.emplace_back(v, w);
        }
    return out;
}

std::vector<std::pair<int, int>> gen_tree(int n, uint64_t seed) {
    SEPSYS_REQUIRE(n >= 1, "tree needs n >= 1");
    std::vector<std::pair<int, int>> out;
    if (n == 1) return out;
    Rng rng(seed);
    // random attachment: vertex i hangs off a uniform earlier vertex
    for (int i = 1; i < n; ++i) out.emplace_back(rng.below(i), i);
    return out;
}

std::vector<std::pair<int, int>> gen_grid(int rows, int cols) {
    SEPSYS_REQUIRE(rows >= 1 && cols >= 1, "grid needs positive dimensions");
    std::vector<std::pair<int, int>> out;
    auto at = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) out.emplace_back(at(r, c), at(r, c + 1));
            if (r + 1 < rows) out.emplace_back(at(r, c), at(r + 1, c));
        }
    return out;
}

std::vector<std::pair<int, int>> gen_fig1() {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < 18; ++i) out.emplace_back(i, (i + 1) % 18);
    for (int i : {2, 3, 4, 5, 10, 11, 12, 13}) out.emplace_back(i - 1, i + 3);
    return out;
}

}  // namespace sepsys
