#include "mcx/formulas.hpp"

#include <vector>

#include "mcx/errors.hpp"

namespace mcx::formulas {

BigInt fibonacci(long long n) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "Fibonacci numbers start at n = 1");
    BigInt a = 1, b = 1; // F_1, F_2
    for (long long i = 3; i <= n; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return n == 1 ? BigInt(1) : b;
}

HomotopyClass triangle_homotopy(int t) {
    if (t < 0) fail(ErrorCode::InvalidArgument, "triangular tiling needs t >= 0");
    std::vector<HomotopyClass> memo;
    memo.push_back(HomotopyClass::contractible());       // t = 0
    memo.push_back(HomotopyClass::sphere(0, 2));          // t = 1
    memo.push_back(HomotopyClass::sphere(0, 2));          // t = 2
    memo.push_back(HomotopyClass::sphere(1, 1));          // t = 3
    memo.push_back(HomotopyClass::sphere(1, 5));          // t = 4
    for (int i = 5; i <= t; ++i) {
        HomotopyClass part = wedge(suspension(memo[i - 3], 1), suspension(memo[i - 3], 1));
        memo.push_back(wedge(part, suspension(memo[i - 5], 2)));
    }
    return memo[static_cast<std::size_t>(t)];
}

BigInt SphereCountTable::at(int t, int d) const {
    auto it = counts.find({t, d});
    return it == counts.end() ? BigInt(0) : it->second;
}

std::map<int, BigInt> SphereCountTable::row(int t) const {
    std::map<int, BigInt> out;
    for (const auto& [td, c] : counts)
        if (td.first == t && c != 0) out[td.second] = c;
    return out;
}

SphereCountTable triangle_counts_via_gf(int t_max) {
    if (t_max < 2) fail(ErrorCode::InvalidArgument, "table starts at t = 2");
    SphereCountTable table;
    table.t_max = t_max;
    // numerator 2x^2 + x^3 y + 5x^4 y + 2x^6 y^2
    std::map<std::pair<int, int>, BigInt> numerator = {
        {{2, 0}, 2}, {{3, 1}, 1}, {{4, 1}, 5}, {{6, 2}, 2}};
    auto& s = table.counts;
    auto get = [&](int t, int d) -> BigInt {
        auto it = s.find({t, d});
        return it == s.end() ? BigInt(0) : it->second;
    };
    for (int t = 2; t <= t_max; ++t)
        for (int d = 0; d <= t; ++d) {
            BigInt v = 0;
            auto num = numerator.find({t, d});
            if (num != numerator.end()) v += num->second;
            // denominator 1 - 2x^3 y - x^5 y^2 unrolls to this convolution
            v += 2 * get(t - 3, d - 1);
            v += get(t - 5, d - 2);
            if (v != 0) s[{t, d}] = v;
        }
    return table;
}

SphereCountTable triangle_counts_via_recursion(int t_max) {
    if (t_max < 2) fail(ErrorCode::InvalidArgument, "table starts at t = 2");
    SphereCountTable table;
    table.t_max = t_max;
    auto& s = table.counts;
    // seed rows t <= 6
    s[{2, 0}] = 2;
    s[{3, 1}] = 1;
    s[{4, 1}] = 5;
    s[{5, 1}] = 4;
    s[{6, 2}] = 4;
    auto get = [&](int t, int d) -> BigInt {
        auto it = s.find({t, d});
        return it == s.end() ? BigInt(0) : it->second;
    };
    for (int t = 7; t <= t_max; ++t)
        for (int d = 2; d <= t; ++d) {
            BigInt v = 2 * get(t - 3, d - 1) + get(t - 5, d - 2);
            if (v != 0) s[{t, d}] = v;
        }
    // drop any rows past t_max the seeds might carry
    std::erase_if(s, [t_max](const auto& kv) { return kv.first.first > t_max; });
    return table;
}

int f_of_t(int t) {
    if (t < 2) fail(ErrorCode::InvalidArgument, "f(t) defined for t >= 2");
    switch (t % 5) {
        case 0: return 5;
        case 1: return 2;
        case 2: return 4;
        case 3: return 1;
        case 4: return 3;
    }
    return 0;
}

DimInterval dim_interval(int t) {
    if (t < 2) fail(ErrorCode::InvalidArgument, "dimension interval defined for t >= 2");
    int f = f_of_t(t);
    if ((2 * t - f) % 5 != 0)
        fail(ErrorCode::Internal, "2t - f(t) is not divisible by 5");
    return DimInterval{t / 3, (2 * t - f) / 5};
}

HomotopyClass pentagon_homotopy(int t) {
    if (t < 1) fail(ErrorCode::InvalidArgument, "pentagonal tiling needs t >= 1");
    return HomotopyClass::sphere(t, fibonacci(t + 2) - 1);
}

HomotopyClass pendant_pentagon_homotopy(int t) {
    if (t < 1) fail(ErrorCode::InvalidArgument, "pendant pentagonal tiling needs t >= 1");
    return HomotopyClass::sphere(t, fibonacci(t + 2));
}

const std::map<int, std::map<int, BigInt>>& golden_triangle_rows() {
    static const std::map<int, std::map<int, BigInt>> rows = {
        {2, {{0, 2}}},
        {3, {{1, 1}}},
        {4, {{1, 5}}},
        {5, {{1, 4}}},
        {6, {{2, 4}}},
        {7, {{2, 12}}},
        {8, {{2, 8}, {3, 1}}},
        {9, {{3, 13}}},
        {10, {{3, 28}}},
        {11, {{3, 16}, {4, 6}}},
        {12, {{4, 38}}},
        {13, {{4, 64}, {5, 1}}},
    };
    return rows;
}

} // namespace mcx::formulas
