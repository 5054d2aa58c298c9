#include "purebetti/homology.hpp"

#include <algorithm>
#include <unordered_map>

#include "detail/homology_engine.hpp"
#include "purebetti/errors.hpp"

namespace purebetti {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime(p)) throw DomainError("field characteristic must be a prime below 2^31");
    return FieldSpec(Kind::Prime, p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("gf:", 0) == 0) {
        std::string num = text.substr(3);
        if (num.empty() || num.size() > 10 || !std::all_of(num.begin(), num.end(), ::isdigit))
            throw DomainError("bad field '" + text + "'");
        std::uint64_t p = std::stoull(num);
        if (p >= (1ull << 31)) throw DomainError("field characteristic must be a prime below 2^31");
        return prime(static_cast<std::uint32_t>(p));
    }
    throw DomainError("bad field '" + text + "' (expected q or gf:P)");
}

std::string FieldSpec::to_string() const {
    return is_rational() ? "q" : "gf:" + std::to_string(p_);
}

SparseMatrix boundary_matrix(const SimplicialComplex& delta, int k, FieldSpec field) {
    if (delta.is_void()) throw DomainError("boundary_matrix: void complex");
    if (k < 0) throw DomainError("boundary_matrix: degree must be non-negative");
    auto cols = delta.faces_of_size(k + 1);
    auto rows = delta.faces_of_size(k);
    std::unordered_map<Face, int, FaceHash> row_index;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) row_index.emplace(rows[i], i);
    SparseMatrix m;
    m.rows = static_cast<int>(rows.size());
    m.cols = static_cast<int>(cols.size());
    for (const Face& sigma : cols) {
        std::vector<std::pair<int, std::int64_t>> col;
        int t = 0;
        sigma.for_each([&](int v) {
            Face f = sigma;
            f.reset(v);
            std::int64_t sign = (t % 2 == 0) ? 1 : -1;
            if (!field.is_rational() && sign < 0) sign += field.characteristic();
            col.emplace_back(row_index.at(f), sign);
            ++t;
        });
        std::sort(col.begin(), col.end());
        m.columns.push_back(std::move(col));
    }
    return m;
}

std::size_t matrix_rank(const SparseMatrix& m, FieldSpec field) {
    std::vector<detail::IntColumn> cols;
    for (const auto& c : m.columns) {
        detail::IntColumn col;
        for (const auto& [r, v] : c)
            if (v != 0) col.emplace_back(static_cast<std::uint32_t>(r), v);
        cols.push_back(std::move(col));
    }
    if (field.is_rational()) return detail::rank_rational(std::move(cols), m.rows);
    return detail::rank_mod_p(std::move(cols), m.rows, field.characteristic());
}

HomologyVector reduced_homology(const SimplicialComplex& delta, FieldSpec field) {
    if (delta.is_void()) return {};
    if (detail::fits_word(delta)) {
        auto c = detail::compact<std::uint64_t>(delta.facets());
        return detail::homology_of(c.facets, field);
    }
    auto c = detail::compact<Face>(delta.facets());
    return detail::homology_of(c.facets, field);
}

HomologyVector homology_with_collapse(const SimplicialComplex& delta, FieldSpec field) {
    return reduced_homology(collapse(delta), field);
}

HomologyVector link_homology(const SimplicialComplex& delta, const Face& f, FieldSpec field) {
    if (!delta.contains(f)) throw DomainError("link: " + delta.face_to_string(f) + " is not a face");
    return detail::link_homology_compact<Face>(delta.facets(), f, field);
}

}  // namespace purebetti
