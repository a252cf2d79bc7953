#include "orchard/group_counting.hpp"

namespace orchard {

namespace {

constexpr std::int64_t kBruteCap = 500;
constexpr std::int64_t kFormulaOrderCap = 1 << 30; // keeps the closed form inside int64

} // namespace

int psi(const AbelianStructure& g) {
    int count = 0;
    for (auto n : g.factors)
        if (n % 3 == 0) ++count;
    return count;
}

int psi_index_gap(const AbelianStructure& g) {
    const int k = static_cast<int>(g.factors.size());
    for (int j = 0; j < k; ++j)
        if (g.factors[static_cast<std::size_t>(j)] % 3 == 0) return k - (j + 1);
    return 0;
}

std::int64_t zero_sum_triples(const AbelianStructure& g) {
    g.validate();
    std::int64_t n = g.order();
    if (n > kFormulaOrderCap) fail(Errc::TooLarge, "group order too large for the closed form");
    std::int64_t three_pow = 1;
    for (int i = 0; i < psi(g); ++i) three_pow *= 3;
    std::int64_t raw = n * n - 3 * n + 2 * three_pow;
    if (raw % 6 != 0) fail(Errc::NonInteger, "triple-count numerator is not divisible by 6");
    return raw / 6;
}

std::int64_t zero_sum_triples_bruteforce(const AbelianStructure& g) {
    g.validate();
    const std::int64_t n = g.order();
    if (n > kBruteCap) fail(Errc::TooLarge, "brute-force count capped at |G| <= 500");
    const int k = static_cast<int>(g.factors.size());

    // Componentwise z = -(x+y); count ordered pairs with x, y, z pairwise
    // distinct, then divide by the 6 orderings of each triple.
    std::vector<std::int64_t> weight(static_cast<std::size_t>(k), 1);
    for (int i = 1; i < k; ++i)
        weight[static_cast<std::size_t>(i)] =
            weight[static_cast<std::size_t>(i - 1)] * g.factors[static_cast<std::size_t>(i - 1)];

    std::int64_t ordered = 0;
    for (std::int64_t x = 0; x < n; ++x) {
        for (std::int64_t y = 0; y < n; ++y) {
            if (x == y) continue;
            std::int64_t z = 0;
            for (int i = 0; i < k; ++i) {
                std::int64_t ni = g.factors[static_cast<std::size_t>(i)];
                std::int64_t xi = (x / weight[static_cast<std::size_t>(i)]) % ni;
                std::int64_t yi = (y / weight[static_cast<std::size_t>(i)]) % ni;
                std::int64_t zi = (2 * ni - xi - yi) % ni;
                z += zi * weight[static_cast<std::size_t>(i)];
            }
            if (z != x && z != y) ++ordered;
        }
    }
    if (ordered % 6 != 0) fail(Errc::Internal, "ordered triple count not divisible by 6");
    return ordered / 6;
}

std::int64_t green_tao_bound(std::int64_t n_points) {
    if (n_points < 3) fail(Errc::TooSmall, "bound defined for N >= 3");
    if (n_points > kFormulaOrderCap) fail(Errc::TooLarge, "N too large for the bound formula");
    return n_points * (n_points - 3) / 6 + 1;
}

SolutionCount classify_excess(const AbelianStructure& g) {
    g.validate();
    if (g.factors.size() > 2)
        fail(Errc::RankTooHigh, "expected at most two invariant factors");

    SolutionCount out;
    out.group = g;
    out.formula_count = zero_sum_triples(g);
    out.bound = green_tao_bound(g.order());
    out.excess = out.formula_count - out.bound;

    const bool three_divides_n1 = g.factors.size() == 2 && g.factors[0] % 3 == 0;
    if (out.excess != (three_divides_n1 ? 2 : 0))
        fail(Errc::Internal, "excess dichotomy violated");
    return out;
}

} // namespace orchard
