#include "purebetti/survey.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "purebetti/errors.hpp"
#include "purebetti/parallel.hpp"

namespace purebetti {

// ---- Filters -----------------------------------------------------------------

CensusFilter CensusFilter::ideal(int n) {
    CensusFilter f;
    f.n = n;
    f.require_all_vertices = true;
    f.exclude_full_simplex = true;
    return f;
}

CensusFilter CensusFilter::css(int n) {
    CensusFilter f = ideal(n);
    f.forbid_cone_vertex = true;
    f.forbid_twin_vertices = true;
    return f;
}

CensusFilter CensusFilter::none(int n) {
    CensusFilter f;
    f.n = n;
    return f;
}

CensusFilter CensusFilter::parse(const std::string& text, int n) {
    if (text == "ideal") return ideal(n);
    if (text == "css") return css(n);
    if (text == "none" || text.empty()) return none(n);
    CensusFilter f = none(n);
    std::stringstream ss(text);
    std::string flag;
    while (std::getline(ss, flag, '+')) {
        if (flag == "all-vertices")
            f.require_all_vertices = true;
        else if (flag == "no-cone")
            f.forbid_cone_vertex = true;
        else if (flag == "no-twins")
            f.forbid_twin_vertices = true;
        else if (flag == "not-full")
            f.exclude_full_simplex = true;
        else
            throw DomainError("unknown census filter '" + flag +
                              "' (expected ideal, css, none or all-vertices/no-cone/no-twins/not-full joined by '+')");
    }
    return f;
}

std::string CensusFilter::to_string() const {
    std::vector<std::string> flags;
    if (require_all_vertices) flags.push_back("all-vertices");
    if (forbid_cone_vertex) flags.push_back("no-cone");
    if (forbid_twin_vertices) flags.push_back("no-twins");
    if (exclude_full_simplex) flags.push_back("not-full");
    if (flags.empty()) return "none";
    std::string s;
    for (const auto& f : flags) s += (s.empty() ? "" : "+") + f;
    return s;
}

bool CensusFilter::accepts(const SimplicialComplex& delta) const {
    const auto& facets = delta.facets();
    int size = delta.universe_size();
    Face used = delta.vertex_set();
    if (require_all_vertices && used.count() != size) return false;
    if (exclude_full_simplex && facets.size() == 1 && facets[0] == delta.universe()) return false;
    if (forbid_cone_vertex && is_cone(delta)) return false;
    if (forbid_twin_vertices) {
        std::vector<std::vector<bool>> membership(size, std::vector<bool>(facets.size()));
        for (std::size_t k = 0; k < facets.size(); ++k)
            facets[k].for_each([&](int v) { membership[v][k] = true; });
        bool twins = false;
        used.for_each([&](int a) {
            used.for_each([&](int b) {
                if (a < b && membership[a] == membership[b]) twins = true;
            });
        });
        if (twins) return false;
    }
    return true;
}

namespace {

std::vector<SubsetMask> filtered_keys(const CensusFilter& filter) {
    std::vector<SubsetMask> out;
    for (SubsetMask key : complex_class_representatives(filter.n))
        if (filter.accepts(complex_from_mask(filter.n, key))) out.push_back(key);
    return out;
}

}  // namespace

std::vector<SimplicialComplex> enumerate_complexes(const CensusFilter& filter) {
    std::vector<SimplicialComplex> out;
    for (SubsetMask key : filtered_keys(filter)) out.push_back(complex_from_mask(filter.n, key));
    return out;
}

// ---- Census ------------------------------------------------------------------

std::uint64_t CensusReport::pure_diagram_count() const {
    std::uint64_t c = 0;
    for (const auto& [d, count] : diagrams) c += diagram_is_pure(d);
    return c;
}

namespace {

std::string checkpoint_header(const CensusFilter& filter, FieldSpec field) {
    return "# census n=" + std::to_string(filter.n) + " field=" + field.to_string() + " filter=" + filter.to_string();
}

std::map<SubsetMask, BettiDiagram> load_checkpoint(const std::string& path, const std::string& header, int n) {
    std::map<SubsetMask, BettiDiagram> done;
    std::ifstream in(path);
    if (!in) return done;
    std::string line;
    if (!std::getline(in, line)) return done;
    if (line != header) throw DomainError("checkpoint " + path + " was written for a different census (" + line + ")");
    while (std::getline(in, line)) {
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw DomainError("malformed checkpoint line: " + line);
        SubsetMask key = std::stoull(line.substr(0, tab), nullptr, 16);
        done.emplace(key, BettiDiagram::parse(line.substr(tab + 1), n));
    }
    return done;
}

void save_checkpoint(const std::string& path, const std::string& header, const std::map<SubsetMask, BettiDiagram>& done) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw DomainError("cannot write checkpoint " + tmp);
        out << header << "\n";
        char buf[32];
        for (const auto& [key, d] : done) {
            std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(key));
            out << buf << "\t" << d.render_inline() << "\n";
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw DomainError("cannot replace checkpoint " + path);
}

}  // namespace

CensusReport census(const CensusFilter& filter, FieldSpec field, const CensusOptions& options) {
    CensusReport report;
    report.filter = filter;
    report.field = field;
    std::vector<SubsetMask> keys = filtered_keys(filter);

    std::string header = checkpoint_header(filter, field);
    std::map<SubsetMask, BettiDiagram> done;
    if (options.checkpoint_path) done = load_checkpoint(*options.checkpoint_path, header, filter.n);

    std::vector<SubsetMask> todo;
    for (SubsetMask k : keys)
        if (!done.count(k)) todo.push_back(k);
    std::size_t batch = options.checkpoint_path ? std::max<std::size_t>(options.checkpoint_every, 1) : todo.size();
    for (std::size_t start = 0; start < todo.size(); start += batch) {
        std::size_t count = std::min(batch, todo.size() - start);
        std::vector<BettiDiagram> results(count);
        parallel_for(count, options.jobs, [&](std::size_t k) {
            results[k] = betti_direct(complex_from_mask(filter.n, todo[start + k]), field);
        });
        for (std::size_t k = 0; k < count; ++k) done.emplace(todo[start + k], std::move(results[k]));
        if (options.checkpoint_path) save_checkpoint(*options.checkpoint_path, header, done);
    }
    if (options.checkpoint_path && todo.empty()) save_checkpoint(*options.checkpoint_path, header, done);

    for (SubsetMask k : keys) {
        const BettiDiagram& d = done.at(k);
        report.entries.push_back({k, d});
        ++report.diagrams[d];
    }
    return report;
}

std::vector<BettiDiagram> pure_diagram_list(const CensusReport& report) {
    std::vector<BettiDiagram> out;
    for (const auto& [d, count] : report.diagrams)
        if (diagram_is_pure(d)) out.push_back(d);
    std::stable_sort(out.begin(), out.end(), [](const BettiDiagram& a, const BettiDiagram& b) {
        int pa = a.projective_dimension(), pb = b.projective_dimension();
        if (pa != pb) return pa < pb;
        return *diagram_shift_type(a) < *diagram_shift_type(b);
    });
    return out;
}

// ---- Cone membership -----------------------------------------------------------

namespace {

// Phase-one simplex on rows A x = b (b >= 0), x >= 0, with artificial
// starting basis. Artificial columns are not stored: once an artificial
// leaves the basis it never needs to return.
bool feasible(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b) {
    std::size_t m = a.size();
    if (m == 0) return true;
    std::size_t k = a[0].size();
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = k + i;
    // Reduced costs of the structural columns and the objective value.
    std::vector<mpq_class> cost(k, 0);
    mpq_class w = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) cost[j] -= a[i][j];
        w += b[i];
    }
    while (w > 0) {
        std::size_t enter = k;
        for (std::size_t j = 0; j < k; ++j)
            if (sgn(cost[j]) < 0) {
                enter = j;
                break;
            }
        if (enter == k) return false;
        std::size_t leave = m;
        mpq_class best;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(a[i][enter]) <= 0) continue;
            mpq_class ratio = b[i] / a[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) return false;  // unbounded cannot happen in phase one
        mpq_class piv = a[leave][enter];
        for (auto& x : a[leave]) x /= piv;
        b[leave] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || sgn(a[i][enter]) == 0) continue;
            mpq_class f = a[i][enter];
            for (std::size_t j = 0; j < k; ++j)
                if (sgn(a[leave][j]) != 0) a[i][j] -= f * a[leave][j];
            b[i] -= f * b[leave];
        }
        mpq_class f = cost[enter];
        for (std::size_t j = 0; j < k; ++j)
            if (sgn(a[leave][j]) != 0) cost[j] -= f * a[leave][j];
        basis[leave] = enter;
        w = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] >= k) w += b[i];
    }
    return true;
}

// Floating-point phase one (Dantzig pricing). Returns the final basis
// (indices >= k are artificials) and the claimed verdict, or nothing if the
// iteration budget ran out.
struct FloatVerdict {
    bool feasible;
    std::vector<std::size_t> basis;
};

std::optional<FloatVerdict> float_phase_one(const std::vector<std::vector<std::int64_t>>& a,
                                            const std::vector<std::int64_t>& b) {
    constexpr double eps = 1e-9;
    std::size_t m = a.size(), k = a[0].size();
    std::vector<std::vector<double>> t(m, std::vector<double>(k));
    std::vector<double> rhs(m), cost(k, 0.0);
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        basis[i] = k + i;
        rhs[i] = static_cast<double>(b[i]);
        for (std::size_t j = 0; j < k; ++j) {
            t[i][j] = static_cast<double>(a[i][j]);
            cost[j] -= t[i][j];
        }
    }
    std::size_t budget = 50 * (m + k);
    for (std::size_t it = 0; it < budget; ++it) {
        double w = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] >= k) w += rhs[i];
        if (w <= eps) return FloatVerdict{true, basis};
        std::size_t enter = k;
        double best = -eps;
        for (std::size_t j = 0; j < k; ++j)
            if (cost[j] < best) {
                best = cost[j];
                enter = j;
            }
        if (enter == k) return FloatVerdict{false, basis};
        std::size_t leave = m;
        double ratio = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= eps) continue;
            double r = rhs[i] / t[i][enter];
            if (leave == m || r < ratio - eps || (r <= ratio + eps && t[i][enter] > t[leave][enter])) {
                leave = i;
                ratio = r;
            }
        }
        if (leave == m) return std::nullopt;
        double piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        rhs[leave] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave) continue;
            double f = t[i][enter];
            if (f == 0) continue;
            for (std::size_t j = 0; j < k; ++j) t[i][j] -= f * t[leave][j];
            rhs[i] -= f * rhs[leave];
            if (rhs[i] < 0 && rhs[i] > -eps) rhs[i] = 0;
        }
        double f = cost[enter];
        for (std::size_t j = 0; j < k; ++j) cost[j] -= f * t[leave][j];
        basis[leave] = enter;
    }
    return std::nullopt;
}

// Solves M x = r over Q for square M; nothing if M is singular.
std::optional<std::vector<mpq_class>> solve_exact(std::vector<std::vector<mpq_class>> mat, std::vector<mpq_class> r) {
    std::size_t m = mat.size();
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t p = c;
        while (p < m && sgn(mat[p][c]) == 0) ++p;
        if (p == m) return std::nullopt;
        std::swap(mat[p], mat[c]);
        std::swap(r[p], r[c]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == c || sgn(mat[i][c]) == 0) continue;
            mpq_class f = mat[i][c] / mat[c][c];
            for (std::size_t j = c; j < m; ++j) mat[i][j] -= f * mat[c][j];
            r[i] -= f * r[c];
        }
    }
    for (std::size_t i = 0; i < m; ++i) r[i] /= mat[i][i];
    return r;
}

// Checks the floating-point verdict exactly: a nonnegative basic solution
// for feasibility, a Farkas vector y (yA <= 0, yb > 0) for infeasibility.
std::optional<bool> certify(const std::vector<std::vector<std::int64_t>>& a, const std::vector<std::int64_t>& b,
                            const FloatVerdict& verdict) {
    std::size_t m = a.size(), k = a[0].size();
    auto column = [&](std::size_t c, std::size_t i) -> long {
        if (c >= k) return c - k == i ? 1 : 0;
        return static_cast<long>(a[i][c]);
    };
    if (verdict.feasible) {
        std::vector<std::vector<mpq_class>> mat(m, std::vector<mpq_class>(m));
        std::vector<mpq_class> r(m);
        for (std::size_t i = 0; i < m; ++i) {
            r[i] = static_cast<long>(b[i]);
            for (std::size_t c = 0; c < m; ++c) mat[i][c] = column(verdict.basis[c], i);
        }
        auto x = solve_exact(std::move(mat), std::move(r));
        if (!x) return std::nullopt;
        for (std::size_t c = 0; c < m; ++c)
            if (sgn((*x)[c]) < 0 || (verdict.basis[c] >= k && sgn((*x)[c]) != 0)) return std::nullopt;
        return true;
    }
    // Transposed system: B^T y = c_B with cost 1 on artificials.
    std::vector<std::vector<mpq_class>> mat(m, std::vector<mpq_class>(m));
    std::vector<mpq_class> r(m);
    for (std::size_t c = 0; c < m; ++c) {
        r[c] = verdict.basis[c] >= k ? 1 : 0;
        for (std::size_t i = 0; i < m; ++i) mat[c][i] = column(verdict.basis[c], i);
    }
    auto y = solve_exact(std::move(mat), std::move(r));
    if (!y) return std::nullopt;
    mpz_class den = 1;
    for (const auto& q : *y) den = lcm(den, mpz_class(q.get_den()));
    std::vector<mpz_class> yi(m);
    for (std::size_t i = 0; i < m; ++i) yi[i] = mpz_class((*y)[i] * den);
    mpz_class s = 0;
    for (std::size_t i = 0; i < m; ++i) s += yi[i] * static_cast<long>(b[i]);
    if (sgn(s) <= 0) return std::nullopt;
    for (std::size_t j = 0; j < k; ++j) {
        s = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (a[i][j]) s += yi[i] * static_cast<long>(a[i][j]);
        if (sgn(s) > 0) return std::nullopt;
    }
    return false;
}

bool in_cone_rows(const std::vector<std::int64_t>& v, const std::vector<const std::vector<std::int64_t>*>& gens,
                  const std::vector<std::size_t>& rows) {
    std::vector<std::vector<std::int64_t>> a;
    std::vector<std::int64_t> b;
    for (std::size_t r : rows) {
        bool flip = v[r] < 0;
        std::vector<std::int64_t> row(gens.size());
        bool any = v[r] != 0;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            std::int64_t x = (*gens[j])[r];
            any = any || x != 0;
            row[j] = flip ? -x : x;
        }
        if (!any) continue;
        a.push_back(std::move(row));
        b.push_back(flip ? -v[r] : v[r]);
    }
    if (gens.empty() || a.empty()) {
        for (auto x : b)
            if (x != 0) return false;
        return true;
    }
    if (auto verdict = float_phase_one(a, b))
        if (auto sure = certify(a, b, *verdict)) return *sure;
    std::vector<std::vector<mpq_class>> qa(a.size(), std::vector<mpq_class>(gens.size()));
    std::vector<mpq_class> qb(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        qb[i] = static_cast<long>(b[i]);
        for (std::size_t j = 0; j < gens.size(); ++j) qa[i][j] = static_cast<long>(a[i][j]);
    }
    return feasible(std::move(qa), std::move(qb));
}

}  // namespace

bool is_in_cone(const std::vector<std::int64_t>& v, const std::vector<std::vector<std::int64_t>>& gens) {
    for (const auto& g : gens)
        if (g.size() != v.size()) throw DomainError("is_in_cone: dimension mismatch");
    std::vector<const std::vector<std::int64_t>*> ptrs;
    for (const auto& g : gens) ptrs.push_back(&g);
    std::vector<std::size_t> rows(v.size());
    std::iota(rows.begin(), rows.end(), 0);
    return in_cone_rows(v, ptrs, rows);
}

// ---- Extremal rays ---------------------------------------------------------------

BettiDiagram RaySet::ray_diagram(std::size_t k) const {
    BettiDiagram d(n);
    const auto& ray = rays.at(k);
    for (int r = row_min; r <= row_max; ++r)
        for (int j = 0; j < columns; ++j) {
            std::int64_t x = ray[static_cast<std::size_t>((r - row_min) * columns + j)];
            if (x) d.add(j, r + j, static_cast<std::uint64_t>(x));
        }
    return d;
}

namespace {

// Coordinates whose rows (over the generators) are linearly independent;
// their number is the rank of the generator matrix.
std::vector<std::size_t> independent_coordinates(const std::vector<std::vector<std::int64_t>>& gens, std::size_t dim) {
    std::vector<std::vector<mpq_class>> basis;  // echelon rows
    std::vector<std::size_t> pivots, chosen;
    for (std::size_t r = 0; r < dim; ++r) {
        std::vector<mpq_class> row(gens.size());
        for (std::size_t j = 0; j < gens.size(); ++j) row[j] = static_cast<long>(gens[j][r]);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (sgn(row[pivots[b]]) == 0) continue;
            mpq_class f = row[pivots[b]];
            for (std::size_t j = 0; j < row.size(); ++j)
                if (sgn(basis[b][j]) != 0) row[j] -= f * basis[b][j];
        }
        std::size_t p = 0;
        while (p < row.size() && sgn(row[p]) == 0) ++p;
        if (p == row.size()) continue;
        mpq_class lead = row[p];
        for (auto& x : row) x /= lead;
        basis.push_back(std::move(row));
        pivots.push_back(p);
        chosen.push_back(r);
    }
    return chosen;
}

}  // namespace

RaySet extremal_rays(const std::vector<BettiDiagram>& diagrams) {
    if (diagrams.empty()) throw DomainError("extremal_rays: no diagrams");
    RaySet out;
    out.n = diagrams.front().universe_size();
    int rmin = INT32_MAX, rmax = INT32_MIN, pmax = -1;
    for (const auto& d : diagrams)
        for (const auto& [key, beta] : d.entries()) {
            rmin = std::min(rmin, key.second - key.first);
            rmax = std::max(rmax, key.second - key.first);
            pmax = std::max(pmax, key.first);
        }
    if (pmax < 0) throw DomainError("extremal_rays: all diagrams are zero");
    out.row_min = rmin;
    out.row_max = rmax;
    out.columns = pmax + 1;
    std::size_t dim = static_cast<std::size_t>((rmax - rmin + 1) * out.columns);

    std::vector<std::vector<std::int64_t>> gens;
    for (const auto& d : diagrams) {
        std::vector<std::int64_t> v(dim, 0);
        std::int64_t g = 0;
        for (const auto& [key, beta] : d.entries()) {
            auto x = static_cast<std::int64_t>(beta);
            v[static_cast<std::size_t>((key.second - key.first - rmin) * out.columns + key.first)] = x;
            g = std::gcd(g, x);
        }
        if (g == 0) continue;
        for (auto& x : v) x /= g;
        gens.push_back(std::move(v));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::vector<std::size_t> rows = independent_coordinates(gens, dim);
    out.rank = rows.size();

    // Drop generators lying in the cone of the others; larger vectors first,
    // since they are the likeliest to be sums of smaller ones.
    std::vector<std::size_t> order(gens.size());
    std::iota(order.begin(), order.end(), 0);
    auto total = [&](std::size_t k) { return std::accumulate(gens[k].begin(), gens[k].end(), std::int64_t{0}); };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return total(x) > total(y); });
    std::vector<bool> alive(gens.size(), true);
    for (std::size_t k : order) {
        std::vector<const std::vector<std::int64_t>*> rest;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != k && alive[j]) rest.push_back(&gens[j]);
        if (in_cone_rows(gens[k], rest, rows)) alive[k] = false;
    }
    for (std::size_t k = 0; k < gens.size(); ++k)
        if (alive[k]) out.rays.push_back(gens[k]);
    return out;
}

}  // namespace purebetti
