#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "purebetti/complex.hpp"

namespace purebetti {

// Coefficient field: the rationals or GF(p) for a prime p < 2^31.
class FieldSpec {
public:
    enum class Kind { Rationals, Prime };

    static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
    static FieldSpec prime(std::uint32_t p);
    // Accepts "q" or "gf:P".
    static FieldSpec parse(const std::string& text);

    Kind kind() const { return kind_; }
    std::uint32_t characteristic() const { return p_; }
    bool is_rational() const { return kind_ == Kind::Rationals; }
    std::string to_string() const;

    bool operator==(const FieldSpec&) const = default;

private:
    FieldSpec(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

// Degree k >= -1 to dim H̃_k; zero entries are omitted.
using HomologyVector = std::map<int, std::uint64_t>;

// Column-sparse integer matrix; each column lists (row, value) by ascending row.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, std::int64_t>>> columns;
};

// Boundary map from k-dimensional faces to (k-1)-dimensional faces, with
// faces indexed in (size, lex) order. Entries are reduced into [0, p) for
// prime fields.
SparseMatrix boundary_matrix(const SimplicialComplex& delta, int k, FieldSpec field);

std::size_t matrix_rank(const SparseMatrix& m, FieldSpec field);

HomologyVector reduced_homology(const SimplicialComplex& delta, FieldSpec field);
HomologyVector homology_with_collapse(const SimplicialComplex& delta, FieldSpec field);

// Homology of the link of f, after removing dominated vertices.
HomologyVector link_homology(const SimplicialComplex& delta, const Face& f, FieldSpec field);

}  // namespace purebetti
