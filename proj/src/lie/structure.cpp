#include "gaugework/lie/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace gaugework::lie {

namespace {

// Sign of the permutation taking (0,1,2) to `order`.
int permutation_sign(std::array<int, 3> order) {
    int sign = 1;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            if (order[static_cast<std::size_t>(i)] > order[static_cast<std::size_t>(j)]) sign = -sign;
        }
    }
    return sign;
}

}  // namespace

void StructureConstants::check(int a, int b, int c) const {
    for (int x : {a, b, c}) {
        if (x < 1 || x > dim_) {
            throw std::out_of_range("structure constant index " + std::to_string(x) + " outside 1.." +
                                    std::to_string(dim_));
        }
    }
}

BigRational StructureConstants::at(int a, int b, int c) const {
    check(a, b, c);
    auto it = entries_.find({a, b, c});
    return it == entries_.end() ? BigRational(0) : it->second;
}

void StructureConstants::set_raw(int a, int b, int c, const BigRational& v) {
    check(a, b, c);
    if (v == 0) {
        entries_.erase({a, b, c});
    } else {
        entries_[{a, b, c}] = v;
    }
}

void StructureConstants::set_antisymmetric(int a, int b, int c, const BigRational& v) {
    check(a, b, c);
    if (a == b || b == c || a == c) {
        if (v != 0) throw std::invalid_argument("antisymmetric entry needs distinct indices");
        return;
    }
    Triple idx{a, b, c};
    std::array<int, 3> order{0, 1, 2};
    do {
        set_raw(idx[static_cast<std::size_t>(order[0])], idx[static_cast<std::size_t>(order[1])],
                idx[static_cast<std::size_t>(order[2])], v * permutation_sign(order));
    } while (std::next_permutation(order.begin(), order.end()));
}

std::vector<std::pair<Triple, BigRational>> StructureConstants::orbit_representatives() const {
    std::vector<std::pair<Triple, BigRational>> out;
    for (const auto& [t, v] : entries_) {
        if (t[0] < t[1] && t[1] < t[2]) out.emplace_back(t, v);
    }
    return out;
}

StructureConstants so3_structure() {
    StructureConstants f(3);
    f.set_antisymmetric(1, 2, 3, 1);
    return f;
}

StructureConstants so4_structure() {
    StructureConstants f(6);
    f.set_antisymmetric(3, 2, 1, 1);
    f.set_antisymmetric(1, 5, 6, 1);
    f.set_antisymmetric(2, 4, 6, 1);
    f.set_antisymmetric(3, 4, 5, 1);
    return f;
}

std::string ValidityReport::describe() const {
    std::string out;
    if (antisymmetric) {
        out += "antisymmetry ok";
    } else {
        const auto& t = *antisymmetry_violation;
        out += "antisymmetry violated at (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
               std::to_string(t[2]) + ")";
    }
    out += "; ";
    if (jacobi) {
        out += "jacobi ok";
    } else {
        const auto& t = *jacobi_violation;
        out += "jacobi violated at (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
               std::to_string(t[2]) + "," + std::to_string(t[3]) + ")";
    }
    return out;
}

ValidityReport check_structure(const StructureConstants& f) {
    ValidityReport report;
    int n = f.dim();
    for (int a = 1; a <= n && report.antisymmetric; ++a) {
        for (int b = 1; b <= n && report.antisymmetric; ++b) {
            for (int c = 1; c <= n && report.antisymmetric; ++c) {
                BigRational v = f.at(a, b, c);
                if (v != -f.at(b, a, c) || v != -f.at(a, c, b)) {
                    report.antisymmetric = false;
                    report.antisymmetry_violation = Triple{a, b, c};
                }
            }
        }
    }
    for (int a = 1; a <= n && report.jacobi; ++a) {
        for (int b = 1; b <= n && report.jacobi; ++b) {
            for (int c = 1; c <= n && report.jacobi; ++c) {
                for (int d = 1; d <= n && report.jacobi; ++d) {
                    BigRational s = 0;
                    for (int e = 1; e <= n; ++e) {
                        s += f.at(a, b, e) * f.at(e, c, d) + f.at(b, c, e) * f.at(e, a, d) +
                             f.at(c, a, e) * f.at(e, b, d);
                    }
                    if (s != 0) {
                        report.jacobi = false;
                        report.jacobi_violation = std::array<int, 4>{a, b, c, d};
                    }
                }
            }
        }
    }
    return report;
}

int levi_civita(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return permutation_sign({i, j, k});
}

int levi_civita4(int a, int b, int c, int d) {
    std::array<int, 4> v{a, b, c, d};
    int sign = 1;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (v[i] == v[j]) return 0;
            if (v[i] > v[j]) sign = -sign;
        }
    }
    return sign;
}

int ThooftSymbols::operator()(int i, int alpha, int beta) const {
    if (i < 1 || i > 3 || alpha < 0 || alpha > 3 || beta < 0 || beta > 3) {
        throw std::out_of_range("'t Hooft symbol index out of range");
    }
    int v = levi_civita4(0, i, alpha, beta);
    if (i == alpha && beta == 0) v -= 1;
    if (alpha == 0 && i == beta) v += 1;
    return v;
}

ThooftSymbols thooft_eta() { return {}; }

ThooftReport check_thooft(const ThooftSymbols& eta) {
    ThooftReport report;
    for (int i = 1; i <= 3; ++i) {
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                if (eta(i, a, b) != -eta(i, b, a)) report.antisymmetric = false;
            }
        }
    }
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 4; ++b) {
                    int lhs = 0;
                    for (int r = 0; r < 4; ++r) lhs += eta(i, a, r) * eta(j, b, r) - eta(j, a, r) * eta(i, b, r);
                    int rhs = 0;
                    for (int k = 1; k <= 3; ++k) rhs += 2 * levi_civita(i, j, k) * eta(k, a, b);
                    ++report.checked;
                    if (lhs != rhs && report.commutation) {
                        report.commutation = false;
                        report.violation = std::array<int, 4>{i, j, a, b};
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace gaugework::lie
