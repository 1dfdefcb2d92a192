#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gaugework/expr/rational.hpp"

namespace gaugework::lie {

using expr::BigRational;

/// Index triple, 1-based.
using Triple = std::array<int, 3>;

/// Sparse f_abc on generators 1..dim.
class StructureConstants {
public:
    StructureConstants() = default;
    explicit StructureConstants(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    BigRational at(int a, int b, int c) const;

    /// Stores v at (a,b,c) and the signed value at every permutation.
    void set_antisymmetric(int a, int b, int c, const BigRational& v);
    /// Stores a single entry verbatim. Used to load or build arbitrary tables.
    void set_raw(int a, int b, int c, const BigRational& v);

    const std::map<Triple, BigRational>& entries() const { return entries_; }

    /// One (a < b < c) entry per nonzero permutation orbit, in index order.
    std::vector<std::pair<Triple, BigRational>> orbit_representatives() const;

    friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

private:
    void check(int a, int b, int c) const;

    int dim_ = 0;
    std::map<Triple, BigRational> entries_;
};

StructureConstants so3_structure();
/// Antisymmetric completion of f_321 = f_156 = f_246 = f_345 = 1.
StructureConstants so4_structure();

struct ValidityReport {
    bool antisymmetric = true;
    std::optional<Triple> antisymmetry_violation;
    bool jacobi = true;
    std::optional<std::array<int, 4>> jacobi_violation;

    bool ok() const { return antisymmetric && jacobi; }
    std::string describe() const;
};

/// Exhaustive over all index tuples; reports the first violation in
/// lexicographic order.
ValidityReport check_structure(const StructureConstants& f);

/// eta^i_{ab} for i in 1..3 and a, b in 0..3.
class ThooftSymbols {
public:
    int operator()(int i, int alpha, int beta) const;
};

ThooftSymbols thooft_eta();

int levi_civita(int i, int j, int k);
int levi_civita4(int a, int b, int c, int d);

struct ThooftReport {
    bool antisymmetric = true;
    bool commutation = true;
    std::size_t checked = 0;
    /// (i, j, alpha, beta) of the first failing commutation check.
    std::optional<std::array<int, 4>> violation;
    bool ok() const { return antisymmetric && commutation; }
};

/// eta^i_{ar} eta^j_{br} - eta^j_{ar} eta^i_{br} = 2 eps_ijk eta^k_{ab} over every i, j, a, b.
ThooftReport check_thooft(const ThooftSymbols& eta);

}  // namespace gaugework::lie
