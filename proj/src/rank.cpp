#include "detail/rank.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>

namespace purebetti::detail {

namespace {

template <class T>
using Column = std::vector<std::pair<std::uint32_t, T>>;

struct Overflow {};

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

struct ModP {
    std::uint64_t p;

    void normalize(Column<std::int64_t>& c) const {
        std::uint64_t inv = mod_pow(static_cast<std::uint64_t>(c.back().second), p - 2, p);
        for (auto& e : c) e.second = static_cast<std::int64_t>(static_cast<std::uint64_t>(e.second) * inv % p);
    }
    // c - b * pc, where pc has pivot entry 1.
    Column<std::int64_t> combine(const Column<std::int64_t>& c, const Column<std::int64_t>& pc) const {
        std::uint64_t b = static_cast<std::uint64_t>(c.back().second);
        Column<std::int64_t> out;
        out.reserve(c.size() + pc.size());
        std::size_t i = 0, j = 0;
        while (i < c.size() || j < pc.size()) {
            if (j == pc.size() || (i < c.size() && c[i].first < pc[j].first)) {
                out.push_back(c[i++]);
            } else if (i == c.size() || pc[j].first < c[i].first) {
                std::uint64_t v = (p - b * static_cast<std::uint64_t>(pc[j].second) % p) % p;
                if (v) out.emplace_back(pc[j].first, static_cast<std::int64_t>(v));
                ++j;
            } else {
                std::uint64_t v = (static_cast<std::uint64_t>(c[i].second) + p -
                                   b * static_cast<std::uint64_t>(pc[j].second) % p) % p;
                if (v) out.emplace_back(c[i].first, static_cast<std::int64_t>(v));
                ++i;
                ++j;
            }
        }
        return out;
    }
};

std::int64_t checked(__int128 v) {
    if (v > INT64_MAX || v < -INT64_MAX) throw Overflow{};
    return static_cast<std::int64_t>(v);
}

struct CheckedInt {
    void normalize(Column<std::int64_t>& c) const {
        std::int64_t g = 0;
        for (auto& e : c) g = std::gcd(g, e.second);
        if (g > 1)
            for (auto& e : c) e.second /= g;
    }
    // a*c - b*pc with a, b the pivot entries divided by their gcd.
    Column<std::int64_t> combine(const Column<std::int64_t>& c, const Column<std::int64_t>& pc) const {
        std::int64_t a = pc.back().second, b = c.back().second;
        std::int64_t g = std::gcd(a, b);
        a /= g;
        b /= g;
        Column<std::int64_t> out;
        out.reserve(c.size() + pc.size());
        std::size_t i = 0, j = 0;
        while (i < c.size() || j < pc.size()) {
            if (j == pc.size() || (i < c.size() && c[i].first < pc[j].first)) {
                out.emplace_back(c[i].first, checked(static_cast<__int128>(a) * c[i].second));
                ++i;
            } else if (i == c.size() || pc[j].first < c[i].first) {
                out.emplace_back(pc[j].first, checked(-static_cast<__int128>(b) * pc[j].second));
                ++j;
            } else {
                __int128 v = static_cast<__int128>(a) * c[i].second - static_cast<__int128>(b) * pc[j].second;
                if (v != 0) out.emplace_back(c[i].first, checked(v));
                ++i;
                ++j;
            }
        }
        normalize(out);
        return out;
    }
};

struct BigInt {
    void normalize(Column<mpz_class>& c) const {
        mpz_class g = 0;
        for (auto& e : c) g = gcd(g, e.second);
        if (g > 1)
            for (auto& e : c) e.second /= g;
    }
    Column<mpz_class> combine(const Column<mpz_class>& c, const Column<mpz_class>& pc) const {
        mpz_class a = pc.back().second, b = c.back().second;
        mpz_class g = gcd(a, b);
        a /= g;
        b /= g;
        Column<mpz_class> out;
        out.reserve(c.size() + pc.size());
        std::size_t i = 0, j = 0;
        while (i < c.size() || j < pc.size()) {
            if (j == pc.size() || (i < c.size() && c[i].first < pc[j].first)) {
                out.emplace_back(c[i].first, a * c[i].second);
                ++i;
            } else if (i == c.size() || pc[j].first < c[i].first) {
                out.emplace_back(pc[j].first, -b * pc[j].second);
                ++j;
            } else {
                mpz_class v = a * c[i].second - b * pc[j].second;
                if (v != 0) out.emplace_back(c[i].first, v);
                ++i;
                ++j;
            }
        }
        normalize(out);
        return out;
    }
};

// Column reduction with the pivot at the largest nonzero row. Columns are
// visited by ascending nonzero count, ties by column index.
template <class T, class Arith>
RankResult reduce(std::vector<Column<T>> cols, std::size_t rows, const Arith& ar) {
    std::vector<std::size_t> order(cols.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return cols[x].size() < cols[y].size(); });
    std::vector<std::int32_t> pivot_of_row(rows, -1);
    std::vector<Column<T>> stored;
    RankResult result;
    for (std::size_t j : order) {
        Column<T> c = std::move(cols[j]);
        while (!c.empty()) {
            std::uint32_t r = c.back().first;
            std::int32_t k = pivot_of_row[r];
            if (k < 0) {
                ar.normalize(c);
                pivot_of_row[r] = static_cast<std::int32_t>(stored.size());
                stored.push_back(std::move(c));
                result.pivot_rows.push_back(r);
                break;
            }
            c = ar.combine(c, stored[k]);
        }
    }
    result.rank = stored.size();
    return result;
}

}  // namespace

RankResult rank_with_pivots(std::vector<IntColumn> cols, std::size_t rows, bool rational, std::uint32_t p) {
    if (!rational) {
        for (auto& c : cols)
            for (auto& e : c) {
                std::int64_t v = e.second % static_cast<std::int64_t>(p);
                e.second = v < 0 ? v + p : v;
            }
        for (auto& c : cols)
            c.erase(std::remove_if(c.begin(), c.end(), [](const auto& e) { return e.second == 0; }), c.end());
        return reduce(std::move(cols), rows, ModP{p});
    }
    try {
        return reduce(cols, rows, CheckedInt{});
    } catch (const Overflow&) {
        std::vector<Column<mpz_class>> big;
        big.reserve(cols.size());
        for (const auto& c : cols) {
            Column<mpz_class> b;
            for (const auto& e : c) b.emplace_back(e.first, mpz_class(static_cast<long>(e.second)));
            big.push_back(std::move(b));
        }
        return reduce(std::move(big), rows, BigInt{});
    }
}

std::size_t rank_mod_p(std::vector<IntColumn> cols, std::size_t rows, std::uint32_t p) {
    return rank_with_pivots(std::move(cols), rows, false, p).rank;
}

std::size_t rank_rational(std::vector<IntColumn> cols, std::size_t rows) {
    return rank_with_pivots(std::move(cols), rows, true, 0).rank;
}

}  // namespace purebetti::detail
